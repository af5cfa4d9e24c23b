"""
CLI Constants
Exit codes and option choices shared by the parser and the controller.
"""

from core.version import __app_name__, __version__

APP_TITLE = __app_name__
APP_VERSION = __version__

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3

OBJECTIVE_CHOICES = ["center", "median", "diameter"]
ALGO_CHOICES = ["auto", "l1-fast", "linf-fast", "ulam-approx", "brute"]
GADGET_CHOICES = ["hsc", "hsc-lp", "ham2ulam", "ham2edit", "pad-edit", "random-points", "random-perms"]
SUITE_CHOICES = ["l1-scaling", "ulam-pairs"]
MODE_CHOICES = ["random", "planted-yes", "planted-no"]
