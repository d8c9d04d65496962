from pydantic import BaseModel, validator

from jpm.models.alphabet import Alphabet
from jpm.models.backend_choices import BackendChoices

FORMAT_VERSION = 1


class RecordHeader(BaseModel):
    name: str
    n: int


class IndexHeader(BaseModel):
    """JSON header written after the magic bytes of an index artifact"""

    version: int = FORMAT_VERSION
    backend: BackendChoices
    alphabet: str
    records: list[RecordHeader]
    eager: bool = False

    @validator("alphabet")
    def valid_alphabet(cls, value):
        Alphabet(tuple(value))
        return value

    @validator("records")
    def has_records(cls, value):
        if not value:
            raise ValueError("an index holds at least one record")
        return value

    def get_alphabet(self) -> Alphabet:
        return Alphabet(tuple(self.alphabet))
