from src.utils.pylogger import WorkerLogger, in_main_process
from src.utils.rich_utils import print_config_tree
from src.utils.utils import extras, task_wrapper
