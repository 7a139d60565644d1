use num_complex::Complex64;

use super::*;
use crate::arith::rat;

fn r(n: i64) -> Rational {
    rat(n, 1)
}

fn unit_window(c: f64) -> Window {
    let q = crate::arith::rational_from_f64(c);
    let h = rat(1, 1000);
    Window::new(&q - &h, &q + &h, -h.clone(), h).unwrap()
}

#[test]
fn escape_examples() {
    let g = escape_grid(&r(0), &unit_window(-1.0), (1, 1), 100).unwrap();
    assert_eq!(g.get(0, 0), g.sentinel());
    // 0 -> 1 -> 2 -> 5: 5 is the first value above 2
    assert_eq!(escape_count(0.0, Complex64::new(1.0, 0.0), 2.0, 100), 3);
    let g = escape_grid(&r(1), &unit_window(-5.0), (1, 1), 100).unwrap();
    assert_eq!(g.get(0, 0), 1);
}

#[test]
fn grid_geometry() {
    let w = Window::new(r(-2), r(2), r(-1), r(1)).unwrap();
    let g = escape_grid(&r(0), &w, (4, 2), 10).unwrap();
    assert_eq!(g.cells.len(), 8);
    assert_eq!(g.cell_center(0, 0), Complex64::new(-1.5, 0.5));
    assert_eq!(g.cell_of(Complex64::new(-1.5, 0.5)), Some((0, 0)));
    assert_eq!(g.cell_of(Complex64::new(2.0, -1.0)), Some((3, 1)));
    assert_eq!(g.cell_of(Complex64::new(3.0, 0.0)), None);
    assert!(Window::new(r(0), r(0), r(0), r(1)).is_err());
    assert!(escape_grid(&r(0), &w, (0, 1), 10).is_err());
}

fn has_root(set: &ComplexRootSet, re: f64, im: f64) -> bool {
    set.roots.iter().any(|x| (x.value - Complex64::new(re, im)).norm() < 1e-12)
}

#[test]
fn prep_roots_examples() {
    let s = prep_roots(&r(0), 0, 2, 1e-9).unwrap();
    assert_eq!(s.roots.len(), 2);
    assert!(has_root(&s, 0.0, 0.0) && has_root(&s, -1.0, 0.0));

    let s = prep_roots(&r(0), 0, 3, 1e-9).unwrap();
    assert_eq!(s.roots.len(), 4);
    assert_eq!(s.real_count(), 2);
    assert!(has_root(&s, 0.0, 0.0));
    assert!(s.roots.iter().any(|x| (x.value.re + 1.754_877_666_246_693).abs() < 1e-12 && x.value.im == 0.0));
    // the complex pair solves X^2 + 0.2451... X + 0.5698...
    let cx: alloc::vec::Vec<_> = s.roots.iter().filter(|x| x.value.im != 0.0).collect();
    assert_eq!(cx.len(), 2);
    assert!((cx[0].value - cx[1].value.conj()).norm() < 1e-12);

    let s = prep_roots(&r(2), 1, 3, 1e-6).unwrap();
    assert_eq!(s.real_count(), s.squarefree.deg());
}

#[test]
fn residuals_are_certified_bounds() {
    let s = prep_roots(&r(1), 2, 6, 1e-6).unwrap();
    for x in &s.roots {
        assert!(x.residual <= 1e-6);
        let rec = certify_residual(&r(1), 2, 6, x.value);
        assert_eq!(rec, x.residual);
    }
    // far from every root the bound is large
    assert!(certify_residual(&r(1), 0, 2, Complex64::new(1.0, 1.0)) > 1.0);
}

#[test]
fn disc_examples() {
    let s = prep_roots(&r(1), 1, 2, 1e-9).unwrap();
    let rep = verify_in_disc(&s, 1e-9).unwrap();
    assert!((rep.max_modulus - 2.0).abs() < 1e-12);
    let s = prep_roots(&r(0), 0, 2, 1e-9).unwrap();
    let rep = verify_in_disc(&s, 1e-9).unwrap();
    assert!((rep.slack - 1.0).abs() < 1e-12);
    let s = prep_roots(&r(2), 0, 1, 1e-9).unwrap();
    assert_eq!(s.roots[0].value, Complex64::new(-2.0, 0.0));
    assert!(verify_in_disc(&s, 1e-9).is_ok());
    let mut bad = s.clone();
    bad.roots[0].value = Complex64::new(-8.0, 0.0);
    assert!(matches!(verify_in_disc(&bad, 1e-9), Err(Error::DiscViolation { index: 0, .. })));
}
