//! Local indices at singular points and the stratified global sum.

mod global;
mod local;
mod milnor;
mod point;

pub use global::{
    chern_side, complement_milnor_sum, divisor_log_sum, index_report, rational_singular_points, rhs_total,
    stratum_totals, total_milnor, IndexReport, StratumTotal,
};
pub use local::{
    affine_indices, hom_index_at_point, log_index_at_point, milnor_number, point_record, LocalIndices, PointRecord,
};
pub use milnor::{milnor_at_maximal, milnor_at_point, milnor_oracle};
pub use point::RationalPoint;
