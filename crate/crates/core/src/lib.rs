//! Exact complete vertex p-center solver.
//!
//! Given m planar points that act both as demands and candidate sites, the
//! crate computes z_p, the smallest radius at which p open sites cover every
//! point, for every p = 1..m. The main route sweeps the sorted unique
//! pairwise distances and solves a set-covering problem per rung; small p can
//! be enumerated instead.
//!
//! ```
//! use cpcenter::geometry::{squared_distance_matrix, PointSet};
//! use cpcenter::cpc::solve_cpc_lscp;
//!
//! let ps = PointSet::new(&[(0.0, 0.0), (1.0, 0.0), (3.0, 0.0)], "three").unwrap();
//! let curve = solve_cpc_lscp(&squared_distance_matrix(&ps)).curve;
//! assert_eq!(curve.values(), vec![2.0, 1.0, 0.0]);
//! ```

pub mod cli;
pub mod cpc;
pub mod dataset_io;
pub mod error;
pub mod geometry;
pub mod mip_emit;
pub mod setcover;
