//! Randomized and exhaustive property checks shared by `properties.rs` and
//! `acceptance.rs`. Each check returns the number of trials run, or the first
//! counterexample.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewlcd::codes::Inner;
use skewlcd::matrix::{self, Row};
use skewlcd::ring_r::{gray_inverse, gray_map, lee_weight, r_code};
use skewlcd::skewpoly::DEFAULT_BUDGET;
use skewlcd::{ConstaModulus, Elem, Field, RingElem, SkewPoly, SkewRing};

pub const SEED: u64 = 0x05EE_D1CD;
pub const TRIALS: usize = 1000;

pub type Outcome = Result<usize, String>;

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt)
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

pub fn fields() -> Vec<Field> {
    vec![
        Field::gf4(),
        Field::gf9(),
        Field::gf16(),
        Field::prime(7).unwrap(),
        Field::default_for(2, 3).unwrap(),
        Field::default_for(3, 3).unwrap(),
        Field::default_for(5, 2).unwrap(),
    ]
}

/// `(field, r)` pairs covering trivial, order-2, order-3 and order-4 twists.
pub fn rings() -> Vec<SkewRing> {
    let mut out = Vec::new();
    for f in fields() {
        for r in 0..f.t() {
            out.push(SkewRing::new(&f, r));
        }
    }
    out
}

pub fn elem(rng: &mut ChaCha8Rng, f: &Field) -> Elem {
    f.elements().nth(rng.gen_range(0..f.q() as usize)).unwrap()
}

pub fn poly(rng: &mut ChaCha8Rng, ring: &SkewRing, max_deg: usize) -> SkewPoly {
    let d = rng.gen_range(0..=max_deg);
    ring.poly((0..=d).map(|_| elem(rng, ring.field())).collect())
}

pub fn ring_elem(rng: &mut ChaCha8Rng, f: &Field) -> RingElem {
    RingElem::from_elems(f, elem(rng, f), elem(rng, f)).unwrap()
}

fn word(rng: &mut ChaCha8Rng, f: &Field, n: usize) -> Vec<RingElem> {
    (0..n).map(|_| ring_elem(rng, f)).collect()
}

/// Schoolbook product of coefficient vectors reduced by the monic modulus,
/// independent of the field's log tables.
fn naive_mul(f: &Field, a: Elem, b: Elem) -> Elem {
    let p = f.p() as i64;
    let t = f.t();
    let (ca, cb) = (f.coeffs(a), f.coeffs(b));
    let mut prod = vec![0i64; 2 * t];
    for (i, &x) in ca.iter().enumerate() {
        for (j, &y) in cb.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as i64 * y as i64) % p;
        }
    }
    let m: Vec<i64> = f.modulus().iter().map(|&c| c as i64).collect();
    for k in (t..2 * t).rev() {
        let c = prod[k];
        if c != 0 {
            for (i, &mi) in m.iter().enumerate().take(t) {
                prod[k - t + i] = (prod[k - t + i] - c * mi).rem_euclid(p);
            }
            prod[k] = 0;
        }
    }
    f.from_coeffs(&prod[..t])
}

pub fn field_axioms() -> Outcome {
    let mut rng = rng(1);
    let fields = fields();
    for trial in 0..TRIALS {
        let f = &fields[trial % fields.len()];
        let (a, b, c) = (elem(&mut rng, f), elem(&mut rng, f), elem(&mut rng, f));
        ensure!(
            f.add(a, f.add(b, c)) == f.add(f.add(a, b), c),
            "{f}: + not associative"
        );
        ensure!(
            f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c),
            "{f}: * not associative"
        );
        ensure!(
            f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a),
            "{f}: not commutative"
        );
        ensure!(
            f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)),
            "{f}: not distributive"
        );
        ensure!(
            f.add(a, f.zero()) == a && f.mul(a, f.one()) == a,
            "{f}: identities"
        );
        ensure!(f.add(a, f.neg(a)).is_zero(), "{f}: additive inverse");
        ensure!(
            f.mul(a, b) == naive_mul(f, a, b),
            "{f}: product disagrees with schoolbook oracle"
        );
        if !a.is_zero() {
            ensure!(
                f.mul(a, f.inv(a)) == f.one(),
                "{f}: inverse of {}",
                f.format(a)
            );
            ensure!(f.pow(a, f.q() as u64 - 1) == f.one(), "{f}: a^(q-1) != 1");
        }
        ensure!(
            f.parse_elem(&f.format(a)).ok() == Some(a),
            "{f}: format/parse round trip"
        );
    }
    Ok(TRIALS)
}

pub fn theta_multiplicative() -> Outcome {
    let mut rng = rng(2);
    let rings = rings();
    for trial in 0..TRIALS {
        let ring = &rings[trial % rings.len()];
        let f = ring.field();
        let (a, b) = (elem(&mut rng, f), elem(&mut rng, f));
        let th = |x| ring.theta(x, 1);
        ensure!(
            th(f.mul(a, b)) == f.mul(th(a), th(b)),
            "{ring:?}: theta(ab)"
        );
        ensure!(
            th(f.add(a, b)) == f.add(th(a), th(b)),
            "{ring:?}: theta(a+b)"
        );
        ensure!(ring.theta(th(a), -1) == a, "{ring:?}: theta^-1 theta");
        ensure!(
            ring.theta(a, ring.order() as i64) == a,
            "{ring:?}: theta^m != id"
        );
        let oracle = (0..ring.r()).fold(a, |x, _| f.pow(x, f.p() as u64));
        ensure!(th(a) == oracle, "{ring:?}: theta(a) != a^(p^r)");
    }
    Ok(TRIALS)
}

pub fn skew_ring_laws() -> Outcome {
    let mut rng = rng(3);
    let rings = rings();
    for trial in 0..TRIALS {
        let ring = &rings[trial % rings.len()];
        let (a, b, c) = (
            poly(&mut rng, ring, 5),
            poly(&mut rng, ring, 5),
            poly(&mut rng, ring, 5),
        );
        ensure!(
            &(&a * &b) * &c == &a * &(&b * &c),
            "{ring:?}: ({a})({b})({c}) not associative"
        );
        ensure!(
            &a * &(&b + &c) == &(&a * &b) + &(&a * &c),
            "{ring:?}: left distributivity"
        );
        ensure!(
            &(&a + &b) * &c == &(&a * &c) + &(&b * &c),
            "{ring:?}: right distributivity"
        );
        let e = elem(&mut rng, ring.field());
        let x = ring.x_pow(1);
        ensure!(
            &x * &ring.constant(e) == &ring.constant(ring.theta(e, 1)) * &x,
            "{ring:?}: x a != theta(a) x"
        );
        if !a.is_zero() && !b.is_zero() {
            ensure!(
                (&a * &b).deg() == a.deg() + b.deg(),
                "{ring:?}: degree not additive"
            );
        }
    }
    Ok(TRIALS)
}

pub fn divmod_reconstruction() -> Outcome {
    let mut rng = rng(4);
    let rings = rings();
    for trial in 0..TRIALS {
        let ring = &rings[trial % rings.len()];
        let f = poly(&mut rng, ring, 9);
        let mut g = poly(&mut rng, ring, 4);
        if g.is_zero() {
            g = ring.one();
        }
        let (q, r) = f.right_divmod(&g).map_err(|e| e.to_string())?;
        ensure!(
            &(&q * &g) + &r == f,
            "{ring:?}: right division of ({f}) by ({g})"
        );
        ensure!(
            r.is_zero() || r.deg() < g.deg(),
            "{ring:?}: right remainder too large"
        );
        let (q, r) = f.left_divmod(&g).map_err(|e| e.to_string())?;
        ensure!(
            &(&g * &q) + &r == f,
            "{ring:?}: left division of ({f}) by ({g})"
        );
        ensure!(
            r.is_zero() || r.deg() < g.deg(),
            "{ring:?}: left remainder too large"
        );
    }
    Ok(TRIALS)
}

fn monics_up_to(ring: &SkewRing, max_deg: usize) -> Vec<SkewPoly> {
    let q = ring.field().q() as u128;
    (0..=max_deg)
        .flat_map(|d| (0..q.pow(d as u32)).map(move |i| ring.monic_from_index(d, i)))
        .collect()
}

/// Every monic common right divisor of degree <= 3 right-divides the gcrd,
/// and none has larger degree.
pub fn gcrd_maximality() -> Outcome {
    let mut rng = rng(5);
    let rings = [
        SkewRing::new(&Field::gf4(), 1),
        SkewRing::new(&Field::gf9(), 1),
        SkewRing::new(&Field::gf16(), 2),
    ];
    let candidates: Vec<Vec<SkewPoly>> = rings.iter().map(|r| monics_up_to(r, 3)).collect();
    for trial in 0..TRIALS {
        let k = trial % rings.len();
        let ring = &rings[k];
        // plant a common right factor half the time
        let (a, b) = if trial % 2 == 0 {
            let c = poly(&mut rng, ring, 2);
            let c = if c.is_zero() { ring.one() } else { c };
            let room = 3 - c.deg();
            (
                &poly(&mut rng, ring, room) * &c,
                &poly(&mut rng, ring, room) * &c,
            )
        } else {
            (poly(&mut rng, ring, 3), poly(&mut rng, ring, 3))
        };
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let g = a.gcrd(&b).map_err(|e| e.to_string())?;
        ensure!(g.is_monic(), "{ring:?}: gcrd({a}, {b}) = {g} not monic");
        ensure!(
            g.right_divides(&a) || a.is_zero(),
            "{ring:?}: gcrd({a}, {b}) does not divide {a}"
        );
        ensure!(
            g.right_divides(&b) || b.is_zero(),
            "{ring:?}: gcrd({a}, {b}) does not divide {b}"
        );
        for d in &candidates[k] {
            let common =
                (a.is_zero() || d.right_divides(&a)) && (b.is_zero() || d.right_divides(&b));
            if common {
                ensure!(
                    d.deg() <= g.deg(),
                    "{ring:?}: {d} beats gcrd({a}, {b}) = {g}"
                );
                ensure!(
                    d.right_divides(&g),
                    "{ring:?}: {d} does not divide gcrd({a}, {b}) = {g}"
                );
            }
        }
    }
    Ok(TRIALS)
}

pub fn crt_isomorphism() -> Outcome {
    let mut rng = rng(6);
    let fields = fields();
    for trial in 0..TRIALS {
        let f = &fields[trial % fields.len()];
        let (x, y) = (ring_elem(&mut rng, f), ring_elem(&mut rng, f));
        let (xu, xz) = x.split();
        let (yu, yz) = y.split();
        let sum = x.add(&y).unwrap().split();
        let prod = x.mul(&y).unwrap().split();
        ensure!(
            sum == (f.add(xu, yu), f.add(xz, yz)),
            "{f}: split not additive at {x}, {y}"
        );
        ensure!(
            prod == (f.mul(xu, yu), f.mul(xz, yz)),
            "{f}: split not multiplicative at {x}, {y}"
        );
        ensure!(
            RingElem::join(f, xu, xz) == x,
            "{f}: join(split({x})) != {x}"
        );
        ensure!(
            RingElem::one(f).split() == (f.one(), f.one()),
            "{f}: split(1)"
        );
        let v = RingElem::v(f);
        ensure!(v.mul(&v).unwrap() == v, "{f}: v^2 != v");
        ensure!(
            x.is_unit() == (!xu.is_zero() && !xz.is_zero()),
            "{f}: unit test at {x}"
        );
        if x.is_unit() {
            ensure!(
                x.mul(&x.inv().unwrap()).unwrap() == RingElem::one(f),
                "{f}: inverse of {x}"
            );
        }
    }
    Ok(TRIALS)
}

pub fn gray_isometry() -> Outcome {
    let mut rng = rng(7);
    let fields = fields();
    for trial in 0..TRIALS {
        let f = &fields[trial % fields.len()];
        let n = rng.gen_range(1..=8);
        let (x, y) = (word(&mut rng, f, n), word(&mut rng, f, n));
        let c = elem(&mut rng, f);
        let sum: Vec<RingElem> = x.iter().zip(&y).map(|(a, b)| a.add(b).unwrap()).collect();
        let scaled: Vec<RingElem> = x
            .iter()
            .map(|a| {
                a.mul(&RingElem::from_elems(f, c, f.zero()).unwrap())
                    .unwrap()
            })
            .collect();
        let (px, py) = (gray_map(&x), gray_map(&y));
        let added: Vec<Elem> = px.iter().zip(&py).map(|(&a, &b)| f.add(a, b)).collect();
        ensure!(gray_map(&sum) == added, "{f}: Phi not additive");
        ensure!(
            gray_map(&scaled) == px.iter().map(|&a| f.mul(c, a)).collect::<Vec<_>>(),
            "{f}: Phi not F_q-linear"
        );
        ensure!(gray_inverse(f, &px).unwrap() == x, "{f}: Phi^-1 Phi != id");
        let z: Vec<Elem> = (0..2 * n).map(|_| elem(&mut rng, f)).collect();
        ensure!(
            gray_map(&gray_inverse(f, &z).unwrap()) == z,
            "{f}: Phi Phi^-1 != id"
        );
        // Lee weight from the definition wt_H(a) + wt_H(a + b)
        let lee: usize = x
            .iter()
            .map(|e| {
                usize::from(!e.a().value().is_zero())
                    + usize::from(!f.add(e.a().value(), e.b().value()).is_zero())
            })
            .sum();
        ensure!(
            lee_weight(&x) == lee && matrix::weight(&px) == lee,
            "{f}: Lee weight"
        );
        let diff: Vec<RingElem> = x.iter().zip(&y).map(|(a, b)| a.sub(b).unwrap()).collect();
        let hamming = px.iter().zip(&py).filter(|(a, b)| a != b).count();
        ensure!(
            lee_weight(&diff) == hamming,
            "{f}: Lee distance != Hamming distance of images"
        );
    }
    Ok(TRIALS)
}

fn r_dot(x: &[RingElem], y: &[RingElem], inner: Inner) -> RingElem {
    let f = x[0].field();
    x.iter().zip(y).fold(RingElem::zero(f), |acc, (a, b)| {
        let b = if inner == Inner::Hermitian {
            b.conj().unwrap()
        } else {
            b.clone()
        };
        acc.add(&a.mul(&b).unwrap()).unwrap()
    })
}

fn ring_rows(rows: &[Row], f: &Field) -> Vec<Vec<RingElem>> {
    rows.iter().map(|r| gray_inverse(f, r).unwrap()).collect()
}

/// For every pair of right divisors of `x^n - 1` over `F_4` with `n <= 6`:
/// the Gray image of `C^perp` is the dual of the Gray image, `C^perp` is
/// `R`-orthogonal to `C` with complementary size, and the component, Gray
/// and hull views of LCD agree.
pub fn gray_duality_and_lcd() -> Outcome {
    let f = Field::gf4();
    let ring = SkewRing::new(&f, 1);
    let mut trials = 0;
    for n in [2, 4, 6] {
        let m = ConstaModulus::new(&ring, n, f.one()).map_err(|e| e.to_string())?;
        let divisors = m
            .right_divisors_in(0..=n, DEFAULT_BUDGET)
            .map_err(|e| e.to_string())?;
        for g1 in &divisors {
            for g2 in &divisors {
                let c = r_code(&ring, n, f.one(), f.zero(), g1, g2).map_err(|e| e.to_string())?;
                let gray = c.gray_code().map_err(|e| e.to_string())?;
                for inner in Inner::ALL {
                    let dual = c.dual(inner).map_err(|e| format!("{c:?}: {e}"))?;
                    let dual_gray = dual.gray_code().map_err(|e| e.to_string())?;
                    ensure!(
                        dual_gray == gray.dual(inner).unwrap(),
                        "{c:?} {inner}: Phi(C^perp) != Phi(C)^perp"
                    );
                    ensure!(
                        dual_gray.dim() + gray.dim() == 2 * n,
                        "{c:?} {inner}: |C||C^perp| != |R|^n"
                    );
                    let rows = ring_rows(gray.generator(), &f);
                    let drows = ring_rows(dual_gray.generator(), &f);
                    for x in &rows {
                        for y in &drows {
                            ensure!(
                                r_dot(x, y, inner) == RingElem::zero(&f),
                                "{c:?} {inner}: C not orthogonal to C^perp"
                            );
                        }
                    }
                    let lcd = c.is_lcd(inner).map_err(|e| e.to_string())?;
                    let hull = gray.intersect(&dual_gray).unwrap().dim();
                    ensure!(
                        lcd == (hull == 0),
                        "{c:?} {inner}: LCD verdict {lcd} but hull dim {hull}"
                    );
                    ensure!(
                        lcd == gray.is_lcd_matrix(inner).unwrap(),
                        "{c:?} {inner}: Gram criterion"
                    );
                    trials += 1;
                }
            }
        }
    }
    ensure!(trials >= TRIALS, "only {trials} divisor pairs");
    Ok(trials)
}

/// `|C| = q^(2n - deg g1 - deg g2)` by exhaustive codeword generation, for
/// all divisor pairs over `F_4 + vF_4` with `n <= 4` and every unit `lambda`.
pub fn cardinality_law() -> Outcome {
    let f = Field::gf4();
    let ring = SkewRing::new(&f, 1);
    let q = f.q() as u128;
    let mut checked = 0;
    for n in 1..=4 {
        for alpha in f.units() {
            for u in f.units() {
                let beta = f.sub(u, alpha);
                let m1 = ConstaModulus::new(&ring, n, u).map_err(|e| e.to_string())?;
                let m2 = ConstaModulus::new(&ring, n, alpha).map_err(|e| e.to_string())?;
                let d1 = m1
                    .right_divisors_in(0..=n, DEFAULT_BUDGET)
                    .map_err(|e| e.to_string())?;
                let d2 = m2
                    .right_divisors_in(0..=n, DEFAULT_BUDGET)
                    .map_err(|e| e.to_string())?;
                for g1 in &d1 {
                    for g2 in &d2 {
                        let c = r_code(&ring, n, alpha, beta, g1, g2).map_err(|e| e.to_string())?;
                        let expected = q.pow((2 * n - g1.deg() - g2.deg()) as u32);
                        let words = c.codewords(1 << 20).map_err(|e| e.to_string())?;
                        ensure!(
                            words.len() as u128 == expected,
                            "{c:?}: {} codewords, expected {expected}",
                            words.len()
                        );
                        ensure!(c.cardinality().unwrap() == expected, "{c:?}: cardinality()");
                        let distinct: std::collections::HashSet<Vec<Elem>> =
                            words.iter().map(|w| gray_map(w)).collect();
                        ensure!(distinct.len() == words.len(), "{c:?}: repeated codeword");
                        ensure!(
                            words.iter().step_by(61).all(|w| c.contains(w).unwrap()),
                            "{c:?}: stray codeword"
                        );
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(checked)
}
