"""Noncommutative frieze patterns over exact rings."""

from .errors import (ClosureViolation, ConstraintViolated, DescriptorMismatch,
                     DimensionMismatch, ExprSyntaxError, FriezeError, GenerationFailed,
                     LocalRelationViolation, NotInvertible, RetriesExhausted,
                     SubmatrixNotInvertible, UnboundSymbol, UnknownSymbol)
from .expr import evaluate, parse, pit_equal, render
from .frieze import (Frieze, VerificationReport, Violation, exchange_holds, generate_fan,
                     triangle_holds, verify_all, verify_local)
from .matrices import RingMatrix, invert_2x2
from .propagation import (closed_form_M, complete, extract_seed, monodromy, mu,
                          propagate_col, propagate_row, product_M)
from .quasidet import dependence_witness, quasidet, tame_scan
from .quaternion import Quaternion
from .quiddity import (QuiddityCycle, extract, m2_family, m3_family, reduce_at,
                       verify_cycle)
from .rings import PitConfig, Ring, parse_ring

__version__ = "0.1.0"
