from .timer import TimerReport
