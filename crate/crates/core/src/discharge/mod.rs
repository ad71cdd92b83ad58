//! Discharging on complexes with region cells: the initial weights and the
//! two redistribution rules, colorings of `i`-cells, dual graphs and the
//! face-count inequality they imply.

mod coloring;
mod dual;
mod ledger;

pub use coloring::{chromatic_i, i_dim_color, CellColoring, CELL_COLOR_MAX};
pub use dual::{
    check_quanhe, dual_graph, verify_reducibility_jinyong1, DualGraph, QuanheReport, ReducibilityReport,
    RidgeDegree,
};
pub use ledger::{
    apply_r1, apply_r2, detect_contradiction, initial_weights, ContradictionReport, Params, R1Scope, Stage,
    WeightLedger,
};
