import os
import time
from functools import wraps

from rich.console import Console

console = Console(stderr=True)


def timing(f):
    @wraps(f)
    def wrap(*args, **kw):
        ts = time.time()
        result = f(*args, **kw)
        te = time.time()
        total_time = te - ts
        if total_time > 1:
            total_time = round(total_time, 2)
            total_time_string = f"{total_time} seconds"
        elif total_time > 0.001:
            time_miliseconds = int((total_time) * 1000)
            total_time_string = f"{time_miliseconds} miliseconds"
        else:
            time_microseconds = int((total_time) * 1000000)
            total_time_string = f"{time_microseconds} microseconds"
        print_info(f"func: {f.__name__} took: {total_time_string}")

        return result

    return wrap


def make_dir(dir_path: str):
    """Creates a new directory if it doesn't already exist"""
    if dir_path and not os.path.exists(dir_path):
        os.makedirs(dir_path)


def print_hashtags():
    console.print("#" * 88)


def print_separator_message(message: str):
    print_hashtags()
    print_info(message)
    print_hashtags()


def print_info(message: str):
    console.print(f"[bold green]INFO[/bold green]: {message}", highlight=False)


def print_error(message: str):
    console.print(f"[bold red]ERROR[/bold red]: {message}", highlight=False)


def print_warning(message: str):
    console.print(f"[red magenta]WARNING[/red magenta]: {message}", highlight=False)
