from .result import FamilyResult, FamilyTag, CSV_COLUMNS
from .settings import Settings
from .families import (
    selberg_family,
    LSVBuild,
    build_lsv_group,
    lsv_family,
    abcc_family,
    lift_cover,
    det_one_lift,
    product_expander,
    unipotent_product,
)
from .survey import survey, expand_survey, run_family, results_frame
from .error import ClassificationError, CoverLiftError, UnknownFamily
