//! Geometric types of genuine Markov partitions, built numerically for the cat map
//! `[[2,1],[1,1]]` and for its negative, and the properties that realizability forces.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use geotype::sample::{CodeKind, Sampler};
use geotype::{
    advisories, binary_refinement, check_injectivity, incidence_matrix, parse_type, BiCode,
    GeometricType, Subshift,
};

const EPS: f64 = 1e-9;

type Rect = (f64, f64, f64, f64);

/// Markov partition of a hyperbolic toral automorphism, following the classical
/// construction: a short stable and unstable segment through the fixed point at the origin
/// are extended until each one's endpoints lie on the other.
struct Partition {
    // plane coordinates of lattice points: x along the stable direction, y along the unstable one
    lattice: Vec<(f64, f64)>,
    inverse: [[f64; 2]; 2],
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl Partition {
    fn new(es: (f64, f64), eu: (f64, f64), delta: f64) -> Self {
        let k = 40i32;
        let mut lattice = Vec::new();
        for m in -k..=k {
            for n in -k..=k {
                let (m, n) = (m as f64, n as f64);
                lattice.push((es.0 * m + es.1 * n, eu.0 * m + eu.1 * n));
            }
        }
        let det = es.0 * eu.1 - es.1 * eu.0;
        let inverse = [[eu.1 / det, -es.1 / det], [-eu.0 / det, es.0 / det]];
        let min = |it: &mut dyn Iterator<Item = f64>| it.fold(f64::INFINITY, f64::min);

        let (a, b) = (delta, delta);
        let d = min(&mut lattice
            .iter()
            .filter(|l| l.0 >= -b - 1e-12 && l.0 <= a + 1e-12 && l.1 > 1e-12)
            .map(|l| l.1));
        let c = min(&mut lattice
            .iter()
            .filter(|l| l.1 < -1e-12 && l.0 >= -a - 1e-12 && l.0 <= b + 1e-12)
            .map(|l| -l.1));
        let b2 = min(&mut lattice
            .iter()
            .filter(|l| l.0 >= b - 1e-12 && l.1 >= -d - 1e-12 && l.1 <= c + 1e-12 && l.0 > 1e-12)
            .map(|l| l.0));
        let a2 = min(&mut lattice
            .iter()
            .filter(|l| -l.0 >= a - 1e-12 && l.1 >= -c - 1e-12 && l.1 <= d + 1e-12 && l.0 < -1e-12)
            .map(|l| -l.0));
        Partition {
            lattice,
            inverse,
            a: a2,
            b: b2,
            c,
            d,
        }
    }

    /// The rectangle of the lifted partition containing `p`, as `(x0, x1, y0, y1)`.
    fn rect_at(&self, p: (f64, f64)) -> Rect {
        let (px, py) = p;
        let (mut x0, mut x1, mut y0, mut y1) = (
            f64::NEG_INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::INFINITY,
        );
        for &(lx, ly) in &self.lattice {
            if (-self.c..=self.d).contains(&(py - ly)) {
                if lx > px {
                    x1 = x1.min(lx);
                } else if lx < px {
                    x0 = x0.max(lx);
                }
            }
            if (-self.a..=self.b).contains(&(px - lx)) {
                if ly > py {
                    y1 = y1.min(ly);
                } else if ly < py {
                    y0 = y0.max(ly);
                }
            }
        }
        (x0, x1, y0, y1)
    }

    /// Torus position of the rectangle's center, rounded: identifies the rectangle.
    fn key(&self, r: Rect) -> (i64, i64) {
        let (cx, cy) = ((r.0 + r.1) / 2.0, (r.2 + r.3) / 2.0);
        let inv = self.inverse;
        let coord = |t: f64| {
            let f = t.rem_euclid(1.0);
            let f = if f > 1.0 - 1e-7 { 0.0 } else { f };
            (f * 1e6).round() as i64
        };
        (
            coord(inv[0][0] * cx + inv[0][1] * cy),
            coord(inv[1][0] * cx + inv[1][1] * cy),
        )
    }

    fn point(&self, s: f64, t: f64, es: (f64, f64), eu: (f64, f64)) -> (f64, f64) {
        (es.0 * s + es.1 * t, eu.0 * s + eu.1 * t)
    }
}

/// Builds the geometric type of the Markov partition of the map with the given eigen-data.
fn markov_type(es: (f64, f64), eu: (f64, f64), ls: f64, lu: f64, delta: f64) -> GeometricType {
    let part = Partition::new(es, eu, delta);
    let mut rects: BTreeMap<(i64, i64), Rect> = BTreeMap::new();
    for i in 0..20 {
        for j in 0..20 {
            let p = part.point((i as f64 + 0.5) / 20.0, (j as f64 + 0.5) / 20.0, es, eu);
            let r = part.rect_at(p);
            rects.entry(part.key(r)).or_insert(r);
        }
    }
    let area: f64 = rects.values().map(|r| (r.1 - r.0) * (r.3 - r.2)).sum();
    assert!(
        (area - 1.0).abs() < 1e-6,
        "rectangles do not tile the torus: area {area}"
    );

    let keys: Vec<(i64, i64)> = rects.keys().copied().collect();
    let index: BTreeMap<(i64, i64), usize> =
        keys.iter().enumerate().map(|(i, k)| (*k, i + 1)).collect();
    let n = keys.len();

    // pieces[i]: image of rectangle i cut by the partition, bottom to top, as (k, offset in R_k)
    let mut pieces: Vec<Vec<(usize, f64)>> = Vec::new();
    for k0 in &keys {
        let (x0, x1, y0, y1) = rects[k0];
        let (ix0, ix1, iy0, iy1) = if ls > 0.0 {
            (x0 * ls, x1 * ls, y0 * lu, y1 * lu)
        } else {
            (x1 * ls, x0 * ls, y1 * lu, y0 * lu)
        };
        let xm = (ix0 + ix1) / 2.0;
        let mut y = iy0 + EPS;
        let mut out = Vec::new();
        while y < iy1 - EPS {
            let r = part.rect_at((xm, y));
            assert!(
                r.2 >= iy0 - 1e-7 && r.3 <= iy1 + 1e-7,
                "image crosses a rectangle partially"
            );
            out.push((index[&part.key(r)], ix0 - r.0));
            y = r.3 + EPS;
        }
        pieces.push(out);
    }

    // vertical sub-rectangles of each R_k, left to right
    let mut vertical: Vec<Vec<(i64, usize, usize)>> = vec![Vec::new(); n + 1];
    for (i, ps) in pieces.iter().enumerate() {
        for (m, &(k, offset)) in ps.iter().enumerate() {
            vertical[k].push(((offset * 1e7).round() as i64, i + 1, m));
        }
    }
    for v in &mut vertical {
        v.sort();
    }

    let mut hv = Vec::new();
    let (mut rho, mut eps) = (Vec::new(), Vec::new());
    for i in 1..=n {
        hv.push((pieces[i - 1].len(), vertical[i].len()));
    }
    for i in 1..=n {
        let h = pieces[i - 1].len();
        for j in 1..=h {
            let m = if ls > 0.0 { j } else { h - j + 1 };
            let k = pieces[i - 1][m - 1].0;
            let l = vertical[k]
                .iter()
                .position(|&(_, a, b)| (a, b) == (i, m - 1))
                .unwrap()
                + 1;
            rho.push((k, l));
            eps.push(if lu > 0.0 { 1 } else { -1 });
        }
    }
    GeometricType::from_tables(hv, rho, eps).unwrap()
}

fn eigen_data(negative: bool) -> ((f64, f64), (f64, f64), f64, f64) {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let norm = (1.0 + phi * phi).sqrt();
    let es = (1.0 / norm, -phi / norm);
    let eu = (-phi / norm, -1.0 / norm);
    let (ls, lu) = (1.0 / (phi * phi), phi * phi);
    if negative {
        (es, eu, -ls, -lu)
    } else {
        (es, eu, ls, lu)
    }
}

fn fixture(name: &str) -> GeometricType {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.json"));
    parse_type(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn built() -> Vec<(&'static str, GeometricType, bool)> {
    let (es, eu, ls, lu) = eigen_data(false);
    let (nes, neu, nls, nlu) = eigen_data(true);
    vec![
        ("cat_plus", markov_type(es, eu, ls, lu, 0.3), false),
        ("cat_minus", markov_type(nes, neu, nls, nlu, 0.3), true),
        ("cat_plus_fine", markov_type(es, eu, ls, lu, 0.12), false),
    ]
}

#[test]
fn construction_reproduces_the_fixtures() {
    for (name, t, _) in built() {
        assert_eq!(t, fixture(name), "{name}");
    }
}

fn spectral_radius(rows: &[Vec<u64>]) -> f64 {
    let n = rows.len();
    let mut x = vec![1.0; n];
    let mut lambda = 0.0;
    for _ in 0..200 {
        let y: Vec<f64> = (0..n)
            .map(|i| (0..n).map(|k| rows[i][k] as f64 * x[k]).sum())
            .collect();
        lambda = y.iter().cloned().fold(0.0, f64::max);
        x = y.iter().map(|v| v / lambda).collect();
    }
    lambda
}

#[test]
fn incidence_matrix_has_the_stretch_factor() {
    let phi2 = (3.0 + 5f64.sqrt()) / 2.0;
    for (name, t, _) in built() {
        let a = incidence_matrix(&t);
        assert!(a.is_mixing(), "{name}");
        assert!((spectral_radius(&a.rows()) - phi2).abs() < 1e-9, "{name}");
        let b = incidence_matrix(&binary_refinement(&t));
        assert!((spectral_radius(&b.rows()) - phi2).abs() < 1e-9, "{name}");
    }
}

#[test]
fn refinements_are_binary_mixing_injective_and_clean() {
    for (name, t, _) in built() {
        let b = binary_refinement(&t);
        let a = incidence_matrix(&b);
        assert!(a.is_binary() && a.is_mixing(), "{name}");
        assert!(check_injectivity(&b), "{name}");
        assert!(advisories(&b).is_empty(), "{name}: {:?}", advisories(&b));
        assert!(advisories(&t).is_empty(), "{name}");
    }
}

fn lucas(m: u32) -> i64 {
    let (mut a, mut b) = (2i64, 1i64);
    for _ in 0..m {
        (a, b) = (b, a + b);
    }
    a
}

/// Periodic codes of period dividing `p`, grouped into `~T` classes.
fn periodic_classes(sub: &Subshift, p: usize) -> Vec<BTreeSet<BiCode>> {
    let codes: Vec<BiCode> = sub
        .enumerate_periodic(p, 1 << 24)
        .unwrap()
        .into_iter()
        .filter(|c| p.is_multiple_of(c.right_period().len()))
        .collect();
    let mut classes: Vec<BTreeSet<BiCode>> = Vec::new();
    for c in codes {
        if classes.iter().any(|cl| cl.contains(&c)) {
            continue;
        }
        let report = sub.class_of(&c, 64).unwrap();
        assert!(!report.truncated);
        // every member of the class of a periodic code is periodic with the same period
        for m in &report.members {
            assert!(
                m.is_periodic() && p.is_multiple_of(m.right_period().len()),
                "{c} ~T {m}"
            );
        }
        classes.push(report.members);
    }
    classes
}

#[test]
fn periodic_classes_count_the_periodic_points() {
    // |Fix(f^p)| = |det(A^p - I)| = L(2p) - 2, and when f^p preserves every sector at its
    // fixed points each of them is coded by codes of period dividing p
    for (name, t, negative) in built() {
        let sub = Subshift::new(&binary_refinement(&t)).unwrap();
        for p in 1..=4usize {
            if negative && p % 2 == 1 {
                continue;
            }
            let classes = periodic_classes(&sub, p);
            assert_eq!(
                classes.len() as i64,
                lucas(2 * p as u32) - 2,
                "{name}, p={p}"
            );
            assert!(classes.iter().all(|c| c.len() <= 4), "{name}, p={p}");
        }
    }
}

#[test]
fn classes_of_random_codes_are_small_and_shift_free() {
    let mut sampler = Sampler::new(5);
    let kinds = [
        CodeKind::Generic,
        CodeKind::SLeaf,
        CodeKind::ULeaf,
        CodeKind::Corner,
    ];
    for (name, t, _) in built() {
        let sub = Subshift::new(&binary_refinement(&t)).unwrap();
        let mut sizes = BTreeSet::new();
        for i in 0..600 {
            let w = sampler.code(&sub, kinds[i % 4]);
            let class = sub.class_of(&w, 64).unwrap();
            assert!(!class.truncated, "{name}: {w}");
            // at most four sectors meet at a point of an Anosov map
            assert!((1..=4).contains(&class.members.len()), "{name}: {w}");
            sizes.insert(class.members.len());
            if !w.is_periodic() {
                for m in 1..=6 {
                    assert!(
                        !class.members.contains(&w.shift(m)),
                        "{name}: {w} ~T its own shift"
                    );
                }
            }
            for v in &class.members {
                assert_eq!(
                    sub.class_of(v, 64).unwrap().members,
                    class.members,
                    "{name}"
                );
            }
        }
        assert!(
            sizes.contains(&1) && sizes.contains(&2) && sizes.contains(&4),
            "{name}: {sizes:?}"
        );
    }
}
