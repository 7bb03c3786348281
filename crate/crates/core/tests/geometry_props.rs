use std::f64::consts::{FRAC_PI_2, PI, TAU};

use proptest::prelude::*;
use tracezero::geometry::{
    compose_rotation_reflection, reflect_point, reflect_point_polar, reflection_matrix,
    rotation_matrix, AxisLine, Direction, ReflectScale,
};
use tracezero::{Mat2, Point2, Tolerance};

fn point() -> impl Strategy<Value = Point2> {
    (-100.0f64..100.0, -100.0f64..100.0).prop_map(|(x, y)| Point2::new(x, y))
}

/// Wedge `0 < α ≤ θ ≤ 2θ − α < π/2` with a point of polar angle `α`.
fn wedge_sample() -> impl Strategy<Value = (Point2, f64)> {
    (0.01f64..FRAC_PI_2 - 0.01, 0.0f64..1.0, 0.01f64..50.0).prop_map(|(alpha, t, r)| {
        // θ ∈ [α, (α + π/2)/2) keeps 2θ − α below π/2
        let theta = alpha + t * ((alpha + FRAC_PI_2) / 2.0 - alpha) * 0.999;
        (Point2::new(r * alpha.cos(), r * alpha.sin()), theta)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn reflection_is_an_involution(p in point(), phi in -10.0f64..10.0) {
        let axis = AxisLine::new(phi).unwrap();
        let back = reflect_point(reflect_point(p, axis), axis);
        prop_assert!(back.distance(&p) <= 1e-9);
    }

    #[test]
    fn reflection_is_an_isometry(p in point(), phi in 0.0f64..PI) {
        let axis = AxisLine::new(phi).unwrap();
        prop_assert!((reflect_point(p, axis).norm() - p.norm()).abs() <= 1e-9 * (1.0 + p.norm()));
    }

    #[test]
    fn on_axis_points_are_fixed(t in -100.0f64..100.0, phi in 0.0f64..PI) {
        let axis = AxisLine::new(phi).unwrap();
        let p = t * axis.direction();
        let tol = Tolerance::default();
        prop_assert!(axis.contains(&p, tol));
        prop_assert!(reflect_point(p, axis).approx_eq(&p, tol));
    }

    #[test]
    fn off_axis_points_move(t in -100.0f64..100.0, off in 0.01f64..10.0, phi in 0.0f64..PI) {
        let axis = AxisLine::new(phi).unwrap();
        let p = t * axis.direction() + off * axis.perpendicular().direction();
        let tol = Tolerance::default();
        prop_assert!(!axis.contains(&p, tol));
        prop_assert!(!reflect_point(p, axis).approx_eq(&p, tol));
    }

    #[test]
    fn matrix_and_polar_forms_agree((p, theta) in wedge_sample()) {
        let axis = AxisLine::new(theta).unwrap();
        let oracle = reflect_point_polar(p, axis).expect("sample lies in the wedge");
        let got = reflect_point(p, axis);
        prop_assert!((got.x - oracle.x).abs() <= 1e-9 * (1.0 + p.norm()));
        prop_assert!((got.y - oracle.y).abs() <= 1e-9 * (1.0 + p.norm()));
    }

    #[test]
    fn scaled_map_scales_norm(p in point(), lambda in -5.0f64..5.0, phi in 0.0f64..PI) {
        let m = ReflectScale::new(lambda, phi).unwrap();
        let q = m.apply(p);
        prop_assert!((q.norm() - lambda.abs() * p.norm()).abs() <= 1e-12 * (1.0 + q.norm()));
        let via_matrix = m.matrix() * p;
        prop_assert!(q.distance(&via_matrix) <= 1e-12 * (1.0 + q.norm()));
    }

    #[test]
    fn clockwise_composition_law(alpha in 0.0..TAU, theta in 0.0..TAU) {
        let prod = rotation_matrix(alpha, Direction::Clockwise) * reflection_matrix(theta);
        let gamma = compose_rotation_reflection(alpha, theta, Direction::Clockwise);
        prop_assert!(prod.max_abs_diff(&reflection_matrix(gamma)) <= 1e-12);
    }

    #[test]
    fn anticlockwise_composition_law(alpha in 0.0..TAU, theta in 0.0..TAU) {
        let prod = rotation_matrix(alpha, Direction::Anticlockwise) * reflection_matrix(theta);
        let gamma = compose_rotation_reflection(alpha, theta, Direction::Anticlockwise);
        prop_assert!(prod.max_abs_diff(&reflection_matrix(gamma)) <= 1e-12);
    }

    #[test]
    fn rotations_have_unit_determinant(alpha in -20.0f64..20.0) {
        for dir in [Direction::Clockwise, Direction::Anticlockwise] {
            let r = rotation_matrix(alpha, dir);
            prop_assert!((r.det() - 1.0).abs() < 1e-12);
            prop_assert!((r.transpose() * r).max_abs_diff(&Mat2::IDENTITY) < 1e-12);
        }
    }
}
