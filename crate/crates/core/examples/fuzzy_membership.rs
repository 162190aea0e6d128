//! How the "around" membership grades distance on one axis, and how the
//! t-norm joins the two axes of a pixel.
//!
//! `cargo run --example fuzzy_membership`

use gesturelock::{mu_around_1d, mu_match, MembershipParams, TNorm, TimedPoint};

fn main() {
    let triangle = MembershipParams::default();
    let trapezoid = MembershipParams::new(5.0, 20.0, TNorm::Product).unwrap();

    println!("distance  triangle(a=0,b=20)  trapezoid(a=5,b=20)");
    for d in [0.0, 2.5, 5.0, 10.0, 15.0, 19.0, 20.0, 30.0] {
        println!(
            "{d:>8}  {:>18.3}  {:>19.3}",
            mu_around_1d(100.0, 100.0 + d, &triangle),
            mu_around_1d(100.0, 100.0 + d, &trapezoid),
        );
    }

    let reference = TimedPoint::new(100.0, 100.0, 0.0);
    let candidate = TimedPoint::new(105.0, 110.0, 40.0);
    for (name, params) in [
        ("minimum", triangle),
        ("product", {
            MembershipParams::new(0.0, 20.0, TNorm::Product).unwrap()
        }),
    ] {
        let m = mu_match(&reference, &candidate, &params);
        println!(
            "pixel (105,110) vs (100,100) with {name}: axes {:?} -> {:.3}",
            m.axis_degrees, m.degree
        );
    }
}
