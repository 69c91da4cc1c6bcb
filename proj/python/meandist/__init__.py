"""Mean distance functional f(p) = integral of d(p, x) dv on model spaces and meshes."""

from ._meandist import (
    BudgetExceeded,
    DiscreteManifold,
    InputError,
    __version__,
    argmax_g_compact,
    argmax_g_hadamard,
    argmax_g_noncompact,
    c_compact,
    c_hadamard,
    c_noncompact,
    check_lower_bound,
    check_upper_bound_sphere,
    cycle,
    dumbbell_mesh,
    dumbbell_sweep,
    g_compact,
    g_hadamard,
    g_noncompact,
    grid_patch,
    icosphere,
    load_mesh,
    mesh_eval,
    model_eval,
    torus_grid,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "DiscreteManifold",
    "InputError",
    "__version__",
    "argmax_g_compact",
    "argmax_g_hadamard",
    "argmax_g_noncompact",
    "c_compact",
    "c_hadamard",
    "c_noncompact",
    "check_lower_bound",
    "check_upper_bound_sphere",
    "cycle",
    "dumbbell_mesh",
    "dumbbell_sweep",
    "g_compact",
    "g_hadamard",
    "g_noncompact",
    "grid_patch",
    "icosphere",
    "load_mesh",
    "mesh_eval",
    "model_eval",
    "torus_grid",
    "verify",
]
