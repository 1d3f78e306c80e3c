"""Goalkeeper positioning engine.

Shadow geometry, block/save probability models, the minimax position metric,
and a what-if simulation service for analysts.
"""

from .config import (
    DEFAULT_BLOCK_MODEL,
    DEFAULT_SAVE_MODEL,
    DEFAULT_TARGETS,
    EngineConfig,
    ShotTargetConfig,
)
from .errors import (
    DegenerateLineError,
    DegenerateProjectionError,
    DegenerateTriangleError,
    FeatureMismatchError,
    IneligibleStateError,
    KeeperLabError,
    MatchFileError,
    NonConvexPolygonError,
    SingleClassError,
    WeightsFileError,
)
from .evaluator import (
    DivergenceReport,
    MoveDecision,
    MoveDistribution,
    PositionEvaluation,
    analyze_match,
    best_move,
    classify_direction,
    compare_model_vs_actual,
    episode_decisions,
    evaluate_position,
    goal_heatmap,
    is_eligible,
    least_protected_target,
    move_distribution,
)
from .geometry import (
    Circle2,
    GoalConfig,
    GoalPoint,
    PitchConfig,
    PitchPoint,
    RectYZ,
    Triangle2,
    circle_poly_intersection_area,
    convex_poly_intersection_area,
    foot_of_perpendicular,
    polygon_area,
    rect_intersection_area,
    triangle_area,
)
from .kinematics import (
    DIRECTION_LABELS,
    RUN_ANGLES,
    DiveModelParams,
    RunModelParams,
    candidate_positions,
    dive_reach,
    dive_rect,
    run_radius,
    shot_flight_time,
)
from .match_data import (
    Episode,
    Event,
    GameState,
    Match,
    MatchMeta,
    eligibility_reason,
    flag_eligibility,
    match_from_dict,
    match_to_dict,
    parse_match,
    parse_match_text,
    save_match,
    segment_episodes,
    serialize_match,
)
from .probability import (
    BLOCK_FEATURE_NAMES,
    SAVE_FEATURE_NAMES,
    BlockFeatures,
    BlockModelParams,
    FitResult,
    ProbabilityModel,
    SaveFeatures,
    block_features,
    export_model,
    fit_logistic,
    import_model,
    logistic,
    nll_and_gradient,
    p_block,
    p_goal,
    p_save,
    save_features,
)
from .shadows import ShadowSet, dive_shadow, goal_shadow, position_shadow, shadow_set
from .synthetic import generate_synthetic

__version__ = "0.1.0"
