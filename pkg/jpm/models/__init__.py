from .alphabet import Alphabet
from .backend_choices import BackendChoices
from .encoded_text import EncodedText
from .experiment import ExperimentConfig
from .experiment_result import ExperimentResult
from .index_header import FORMAT_VERSION, IndexHeader, RecordHeader
from .jump_trace import JumpResult, JumpTrace, LogicalStep, ProbeCounter
from .occurrence import Occurrence
from .parikh_vector import ParikhVector
from .query_mode_choices import QueryModeChoices
from .query_model_choices import QueryModelChoices
from .query_spec import QuerySpec
from .text_format_choices import TextFormatChoices
from .trend_report import TrendReport

__all__ = [
    'Alphabet',
    'BackendChoices',
    'EncodedText',
    'ExperimentConfig',
    'ExperimentResult',
    'FORMAT_VERSION',
    'IndexHeader',
    'JumpResult',
    'JumpTrace',
    'LogicalStep',
    'Occurrence',
    'ParikhVector',
    'ProbeCounter',
    'QueryModeChoices',
    'QueryModelChoices',
    'QuerySpec',
    'RecordHeader',
    'TextFormatChoices',
    'TrendReport',
]
