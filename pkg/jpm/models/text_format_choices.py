from enum import Enum


class TextFormatChoices(str, Enum):
    PLAIN = "plain"
    FASTA = "fasta"
