from enum import Enum


class ExploreModeOption(str, Enum):
    LABELED = "labeled"
    UNLABELED = "unlabeled"


class FileKind(str, Enum):
    SEED = "seed"
    TRIANGULATION = "triangulation"
    REPRESENTATION = "representation"
