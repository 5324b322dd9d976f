import datetime
import time
from dateutil import tz

def get_current_time(as_str: bool = True):
    '''Local wall-clock time, seconds precision'''
    now = datetime.datetime.now().replace(microsecond=0).astimezone(tz.tzlocal())
    return now.isoformat() if as_str else now

def log_date() -> str:
    return get_current_time(as_str=False).strftime("%Y-%m-%d")

def elapsed_ms(start: float) -> float:
    '''Milliseconds since a time.perf_counter() reading'''
    return (time.perf_counter() - start) * 1000
