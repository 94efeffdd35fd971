mod common;

use common::*;
use cpcenter::cpc::{solve_cpc_lscp, solve_cpc_lscp_e, verify_curve, EnumOptions};
use cpcenter::geometry::{distance_matrix, squared_distance_matrix, DistanceMode};

fn serial() -> EnumOptions {
    EnumOptions { threads: Some(1), ..EnumOptions::default() }
}

#[test]
fn lscp_matches_brute_force_on_random_instances() {
    let mut r = rng(7);
    let mut checked = 0;
    for case in 0..60 {
        let m = 5 + case % 8;
        let pts = if case % 2 == 0 { grid_points(&mut r, m, 6) } else { uniform_points(&mut r, m) };
        let dm = squared_distance_matrix(&point_set(&pts, "rand"));
        let sol = solve_cpc_lscp(&dm);
        let expect = brute_force_curve(&squared(&pts));
        assert_eq!(sol.levels, expect, "case {case}, points {pts:?}");
        let report = verify_curve(&sol.curve, &dm);
        assert!(report.passed(), "case {case}\n{report}");
        checked += 1;
    }
    assert!(checked >= 50);
}

#[test]
fn lscpe_matches_brute_force_for_every_enum_max() {
    let mut r = rng(11);
    for case in 0..30 {
        let m = 5 + case % 8;
        let pts = grid_points(&mut r, m, 5);
        let dm = squared_distance_matrix(&point_set(&pts, "rand"));
        let expect = brute_force_curve(&squared(&pts));
        for enum_max in 2..=4 {
            let sol = solve_cpc_lscp_e(&dm, enum_max, &serial()).unwrap();
            assert_eq!(sol.levels, expect, "case {case}, enum_max {enum_max}");
            assert!(verify_curve(&sol.curve, &dm).passed());
        }
    }
}

#[test]
fn integer_mode_matches_brute_force() {
    let mut r = rng(13);
    for case in 0..25 {
        let m = 5 + case % 8;
        let pts = grid_points(&mut r, m, 9);
        let dm = distance_matrix(&point_set(&pts, "rand"), DistanceMode::Integer);
        let expect = brute_force_curve(&ceiling_int(&pts));
        let a = solve_cpc_lscp(&dm);
        let b = solve_cpc_lscp_e(&dm, 3, &serial()).unwrap();
        assert_eq!(a.levels, expect, "case {case}");
        assert_eq!(b.levels, expect, "case {case}");
        assert_eq!(a.curve.values(), expect);
        assert!(verify_curve(&a.curve, &dm).passed());
    }
}

#[test]
fn duplicate_points_are_handled() {
    let mut r = rng(17);
    for case in 0..15 {
        let m = 5 + case % 6;
        let mut pts = grid_points(&mut r, m, 4);
        pts.push(pts[case % m]);
        let dm = squared_distance_matrix(&point_set(&pts, "dups"));
        let sol = solve_cpc_lscp(&dm);
        let expect = brute_force_curve(&squared(&pts));
        assert_eq!(sol.levels, expect, "case {case}");
        assert_eq!(sol.levels[pts.len() - 2], 0.0);
        assert!(verify_curve(&sol.curve, &dm).passed());
        let e = solve_cpc_lscp_e(&dm, 4, &serial()).unwrap();
        assert_eq!(e.levels, expect);
    }
}

#[test]
fn parallel_enumeration_agrees_with_serial() {
    let mut r = rng(19);
    let pts = grid_points(&mut r, 12, 5);
    let dm = squared_distance_matrix(&point_set(&pts, "rand"));
    let a = solve_cpc_lscp_e(&dm, 4, &serial()).unwrap();
    let b = solve_cpc_lscp_e(&dm, 4, &EnumOptions { threads: Some(3), ..EnumOptions::default() }).unwrap();
    assert_eq!(a, b);
}
