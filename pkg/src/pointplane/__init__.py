"""Model checking for the self-dual point/plane axioms of projective 3-space."""

__version__ = "0.1.0"

from .axioms import (AxiomReport, AxiomSuite, check_all_axioms, check_axiom1,
                     check_axiom2, check_axiom3, check_axiom4, check_duality,
                     replay_axiom)
from .errors import (AxiomsNotSatisfiedError, ContentError, DegenerateInputError,
                     FormatError, InconsistentStructureError, MalformedLineError,
                     PointPlaneError, ResourceLimitError, ShapeError,
                     StructureFormatError)
from .incidence import (IncidenceStructure, dualize, incident, mutually_incident,
                        perp_planes, perp_points)
from .independence import SearchConfig, SearchReport, search_independence
from .lines import (Line, MeetKind, MeetResult, all_lines, collinear_planes,
                    collinear_points, line_through_planes, line_through_points,
                    lines_meet)
from .pg import PrimeField, ProjVector, generate_pg3, normalize, projective_points
from .textio import parse_structure, serialize_structure
from .theorems import (TheoremReport, check_all_theorems, check_meet,
                       check_proper_pencil, check_unique_plane,
                       check_vy_axioms, check_vy_characterization, replay_theorem)
