"""Adjoint affine fusion coefficients and fusion tadpoles."""

from ._core import (
    LevelTooSmall,
    NoClosedForm,
    ParseError,
    comarks,
    dual_coxeter,
    fuse,
    positive_root_count,
    tadpole,
    tensor,
    verify,
)

__all__ = [
    "LevelTooSmall",
    "NoClosedForm",
    "ParseError",
    "comarks",
    "dual_coxeter",
    "fuse",
    "positive_root_count",
    "tadpole",
    "tensor",
    "verify",
]
