mod common;

use gesturelock::gesture::resample_points;
use gesturelock::{
    aggregate, apply_shift, corner_detect, crisp_gesture_match, grid_encode, match_gestures,
    mu_around_1d, mu_match, password_space, rescale, AlignmentParams, CrispParams, Gesture,
    GridSpec, MatchConfig, MembershipParams, Offset, TNorm, TimedPoint, ToleranceShape,
};
use proptest::prelude::*;

fn point() -> impl Strategy<Value = (f64, f64)> {
    (0.0..400.0f64, 0.0..400.0f64)
}

fn gesture() -> impl Strategy<Value = Gesture> {
    prop::collection::vec(point(), 2..40).prop_map(|xy| Gesture::from_xy(400, 400, &xy))
}

fn tnorm() -> impl Strategy<Value = TNorm> {
    prop_oneof![Just(TNorm::Minimum), Just(TNorm::Product)]
}

fn membership() -> impl Strategy<Value = MembershipParams> {
    (0.0..15.0f64, 0.5..30.0f64, tnorm())
        .prop_map(|(a, w, t)| MembershipParams::new(a, a + w, t).unwrap())
}

fn no_align() -> MatchConfig {
    MatchConfig {
        alignment: AlignmentParams::disabled(),
        ..MatchConfig::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn resample_keeps_length_and_endpoints(g in gesture(), n in 2usize..200) {
        let pts = g.flatten();
        let out = resample_points(&pts, n).unwrap();
        prop_assert_eq!(out.len(), n);
        prop_assert_eq!((out[0].x, out[0].y), (pts[0].x, pts[0].y));
        let (last, end) = (out[n - 1], pts[pts.len() - 1]);
        prop_assert_eq!((last.x, last.y), (end.x, end.y));
        prop_assert!(out.windows(2).all(|w| w[1].t >= w[0].t));
    }

    #[test]
    fn resampling_a_uniform_polyline_is_idempotent(turns in prop::collection::vec(-3.0..3.0f64, 1..80), step in 0.5..10.0f64) {
        // vertices already one step apart along the path
        let mut pts = vec![TimedPoint::new(500.0, 500.0, 0.0)];
        let mut heading = 0.0;
        for (i, turn) in turns.iter().enumerate() {
            heading += turn;
            let last = pts[i];
            pts.push(TimedPoint::new(last.x + step * heading.cos(), last.y + step * heading.sin(), (i + 1) as f64));
        }
        let again = resample_points(&pts, pts.len()).unwrap();
        for (a, b) in pts.iter().zip(&again) {
            prop_assert!((a.x - b.x).abs() < 1e-6 && (a.y - b.y).abs() < 1e-6);
        }
    }

    #[test]
    fn rescale_round_trips(g in gesture(), w in 1u32..2000, h in 1u32..2000) {
        let back = rescale(&rescale(&g, w, h).unwrap(), 400, 400).unwrap();
        for (a, b) in g.flatten().iter().zip(back.flatten()) {
            prop_assert!((a.x - b.x).abs() < 1e-9 && (a.y - b.y).abs() < 1e-9);
            prop_assert_eq!(a.t, b.t);
        }
    }

    #[test]
    fn flatten_keeps_every_point(strokes in prop::collection::vec(prop::collection::vec(point(), 1..10), 1..5)) {
        let g = Gesture::new(400, 400, strokes.iter().map(|s| {
            s.iter().enumerate().map(|(i, &(x, y))| TimedPoint::new(x, y, i as f64)).collect()
        }).collect());
        prop_assert_eq!(g.flatten().len(), strokes.iter().map(Vec::len).sum::<usize>());
    }

    #[test]
    fn around_is_bounded_and_monotone(p in membership(), r in 0.0..500.0f64, d1 in 0.0..60.0f64, d2 in 0.0..60.0f64) {
        let (near, far) = if d1 <= d2 { (d1, d2) } else { (d2, d1) };
        let mu_near = mu_around_1d(r, r + near, &p);
        let mu_far = mu_around_1d(r, r + far, &p);
        prop_assert!((0.0..=1.0).contains(&mu_near));
        prop_assert!(mu_far <= mu_near);
        prop_assert!((mu_around_1d(r, r - near, &p) - mu_near).abs() < 1e-12);
        prop_assert!((mu_near - common::around_oracle(near, &p)).abs() < 1e-9);
    }

    #[test]
    fn pixel_match_is_symmetric(p in membership(), a in point(), b in point()) {
        let (pa, pb) = (TimedPoint::new(a.0, a.1, 0.0), TimedPoint::new(b.0, b.1, 5.0));
        prop_assert_eq!(mu_match(&pa, &pb, &p).degree, mu_match(&pb, &pa, &p).degree);
    }

    #[test]
    fn tnorms_have_identity_and_bound(x in 0.0..=1.0f64, y in 0.0..=1.0f64, t in tnorm()) {
        prop_assert_eq!(t.apply(x, 1.0), x);
        prop_assert_eq!(t.apply(x, 0.0), 0.0);
        prop_assert_eq!(t.apply(x, y), t.apply(y, x));
        prop_assert!(t.apply(x, y) <= x.min(y));
    }

    #[test]
    fn aggregate_lies_between_extremes(ds in prop::collection::vec(0.0..=1.0f64, 1..100)) {
        let m = aggregate(&ds).unwrap();
        let lo = ds.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = ds.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(lo <= m && m <= hi);
    }

    #[test]
    fn crisp_accepts_itself(g in gesture(), tol in 0.0..30.0f64, circle in any::<bool>()) {
        let shape = if circle { ToleranceShape::Circle } else { ToleranceShape::Square };
        let params = CrispParams::new(tol, shape).unwrap();
        let pts = g.flatten();
        prop_assert!(crisp_gesture_match(&pts, &pts, &params).unwrap().is_accepted());
    }

    #[test]
    fn password_space_is_monotone(w in 1u64..3000, h in 1u64..3000, t in 1u64..50, c in 0u32..8, dw in 0u64..300, dt in 0u64..20) {
        let base = password_space(w, h, t, c).unwrap();
        prop_assert!(password_space(w + dw, h, t, c).unwrap() >= base);
        prop_assert!(password_space(w, h + dw, t, c).unwrap() >= base);
        prop_assert!(password_space(w, h, t + dt, c).unwrap() <= base);
        if w * h >= t * t {
            prop_assert!(password_space(w, h, t, c + 1).unwrap() >= base);
        }
    }

    #[test]
    fn grid_cells_in_range_without_repeats(g in gesture(), rows in 1u32..10, cols in 1u32..10) {
        if let Ok(cells) = grid_encode(&g, &GridSpec::new(rows, cols)) {
            prop_assert!(!cells.is_empty());
            prop_assert!(cells.iter().all(|&c| (1..=rows * cols).contains(&c)));
            prop_assert!(cells.windows(2).all(|w| w[0] != w[1]));
        }
    }

    #[test]
    fn corners_contain_every_point(g in gesture()) {
        let box_ = corner_detect(&g);
        prop_assert!(g.flatten().iter().all(|p| box_.contains(p.x, p.y)));
    }

    #[test]
    fn shifting_preserves_shape(g in gesture(), dx in -60.0..60.0f64, dy in -60.0..60.0f64) {
        let pts = g.flatten();
        let moved = apply_shift(&pts, Offset::new(dx, dy));
        for (a, b) in pts.windows(2).zip(moved.windows(2)) {
            prop_assert!((a[0].distance(&a[1]) - b[0].distance(&b[1])).abs() < 1e-9);
        }
    }

    #[test]
    fn degree_is_a_symmetric_probability(a in gesture(), b in gesture()) {
        let ab = match_gestures(&a, &b, &no_align()).unwrap();
        let ba = match_gestures(&b, &a, &no_align()).unwrap();
        prop_assert!((0.0..=1.0).contains(&ab.degree));
        prop_assert!((ab.degree - ba.degree).abs() < 1e-12);
        prop_assert_eq!(match_gestures(&a, &a, &MatchConfig::default()).unwrap().degree, 1.0);
    }

    #[test]
    fn lower_threshold_never_rejects_more(a in gesture(), b in gesture(), t1 in 0.0..=1.0f64, t2 in 0.0..=1.0f64) {
        let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
        let at_hi = match_gestures(&a, &b, &no_align().with_threshold(hi)).unwrap();
        let at_lo = match_gestures(&a, &b, &no_align().with_threshold(lo)).unwrap();
        prop_assert!(!at_hi.accepted || at_lo.accepted);
    }

    #[test]
    fn moving_further_never_raises_degree(g in gesture(), angle in 0.0..std::f64::consts::TAU, s1 in 0.0..30.0f64, s2 in 0.0..30.0f64) {
        let (near, far) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
        let (ux, uy) = (angle.cos(), angle.sin());
        let canvas = Gesture::new(2000, 2000, g.strokes.clone());
        let moved = |s: f64| common::translate(&canvas, 500.0 + s * ux, 500.0 + s * uy);
        let base = common::translate(&canvas, 500.0, 500.0);
        let d_near = match_gestures(&base, &moved(near), &no_align()).unwrap().degree;
        let d_far = match_gestures(&base, &moved(far), &no_align()).unwrap().degree;
        prop_assert!(d_far <= d_near + 1e-12);
    }

    #[test]
    fn fuzzy_dominates_crisp_per_gesture(a in gesture(), jitter in prop::collection::vec((-12.0..12.0f64, -12.0..12.0f64), 40), tol in 1.0..15.0f64) {
        let strokes = vec![a.flatten().iter().zip(jitter.iter().cycle()).map(|(p, &(jx, jy))| {
            TimedPoint::new((p.x + jx).clamp(0.0, 400.0), (p.y + jy).clamp(0.0, 400.0), p.t)
        }).collect()];
        let b = Gesture::new(400, 400, strokes);
        let config = MatchConfig {
            membership: MembershipParams::new(tol, tol + 10.0, TNorm::Minimum).unwrap(),
            ..no_align()
        };
        let crisp = CrispParams::new(tol, ToleranceShape::Square).unwrap();
        let crisp_ok = gesturelock::match_gestures_crisp(&a, &b, &crisp, config.resample_n).unwrap();
        if crisp_ok.is_accepted() {
            prop_assert_eq!(match_gestures(&a, &b, &config).unwrap().degree, 1.0);
        }
    }
}
