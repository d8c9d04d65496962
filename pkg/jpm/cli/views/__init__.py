from .bench import bench_command
from .index import index_command
from .query import query_command

__all__ = [
    'bench_command',
    'index_command',
    'query_command',
]
