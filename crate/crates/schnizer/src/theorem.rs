//! The generator actions of types B, C and D as sums of brace-times-shift
//! terms, assembled exactly as in the construction: e_j is a sum of
//! D-products times F and C factors, f_j = E_jj + sum_i B_ij and
//! t_j = T_{1j}^{-1}.

use crate::raw::{Mono, RawTerm};

/// Raw generator terms, indexed by j - 1.
pub(crate) struct RawFamily {
    pub e: Vec<Vec<RawTerm>>,
    pub f: Vec<Vec<RawTerm>>,
    pub t: Vec<RawTerm>,
}

fn z(items: &[(i64, i64, i64)]) -> Mono {
    Mono::of(items)
}

fn term(zm: Mono, c: i64, d: u8, x: Mono) -> RawTerm {
    RawTerm::new(zm, c, d, x)
}

fn left_all(dx: &Mono, terms: Vec<RawTerm>) -> Vec<RawTerm> {
    terms.iter().map(|t| t.left_mul(dx)).collect()
}

/// t_j from T_{1j} = (z-monomial, constant).
fn t_of((tz, tc): (Mono, i64)) -> RawTerm {
    term(tz.scaled(-1), -tc, 0, Mono::default())
}

/// Assembly shared by types B and C.
fn assemble(
    n: i64,
    dd: impl Fn(i64, i64) -> Mono,
    ff: impl Fn(i64) -> Vec<RawTerm>,
    cc: impl Fn(i64, i64) -> Vec<RawTerm>,
    tt: impl Fn(i64, i64) -> (Mono, i64),
    ee: impl Fn(i64) -> Vec<RawTerm>,
    bb: impl Fn(i64, i64) -> Vec<RawTerm>,
) -> RawFamily {
    let mut fam = RawFamily { e: Vec::new(), f: Vec::new(), t: Vec::new() };
    for j in 1..=n {
        let dprod = Mono::sum(&(1..j).map(|k| dd(k, j)).collect::<Vec<_>>());
        let mut terms = left_all(&dprod, ff(j));
        for q in 1..j {
            let dq = Mono::sum(&(0..q).map(|p| dd(p, j)).collect::<Vec<_>>());
            terms.extend(left_all(&dq, cc(q, j)));
        }
        fam.e.push(terms);
        fam.t.push(t_of(tt(1, j)));
        let mut f = ee(j);
        for i in 1..j {
            f.extend(bb(i, j));
        }
        fam.f.push(f);
    }
    fam
}

/// T_{ij} = T_jj + sum_{k=i}^{j-1} A_kj, as a z-monomial and constant.
fn t_block(tjj: (Mono, i64), parts: impl Iterator<Item = Mono>) -> (Mono, i64) {
    let (zm, c) = tjj;
    (parts.fold(zm, |acc, m| acc.plus(&m)), c)
}

/// Type C (sp(2n)); `lam` is lambda'.
pub(crate) fn build_c(n: i64, lam: &[i64]) -> RawFamily {
    let dd = move |i: i64, j: i64| -> Mono {
        if 1 <= i && i < j && j < n {
            z(&[(i, j - 1, -1), (i, j, 1), (j + 1, i, -1), (j, i, 1)])
        } else if j == n && 1 <= i && i < n {
            z(&[(i, n - 1, -2), (n, i, 2)])
        } else {
            Mono::default()
        }
    };
    let ff = move |j: i64| {
        if j < n {
            vec![term(z(&[(j, j, -1)]), 0, 1, z(&[(j, j, 1)]))]
        } else {
            vec![term(z(&[(n, n, -2)]), 0, 2, z(&[(n, n, 1)]))]
        }
    };
    let cc = move |i: i64, j: i64| {
        if j < n {
            vec![
                term(z(&[(i, j, -1), (i, j - 1, 1)]), 0, 1, z(&[(i, j, 1)])),
                term(z(&[(j, i, -1), (j + 1, i, 1)]), 0, 1, z(&[(i, j, 1), (j, i, 1), (i, j - 1, -1)])),
            ]
        } else {
            vec![
                term(z(&[(i, n, 2), (n, i, -2)]), 0, 2, z(&[(i, n - 1, -2), (i, n, 1), (n, i, 2)])),
                term(z(&[(i, n - 1, 1), (n, i, -1)]), 0, 1, z(&[(i, n - 1, -1), (i, n, 1), (n, i, 1)])),
                term(z(&[(i, n - 1, 2), (i, n, -2)]), 0, 2, z(&[(i, n, 1)])),
            ]
        }
    };
    let aa = move |i: i64, j: i64| -> Mono {
        if j <= n - 2 {
            z(&[(i, j - 1, -1), (i, j, 2), (i, j + 1, -1), (j + 2, i, -1), (j + 1, i, 2), (j, i, -1)])
        } else if j == n - 1 {
            z(&[(i, n - 2, -1), (i, n - 1, 2), (i, n, -2), (n, i, 2), (n - 1, i, -1)])
        } else {
            z(&[(i, n - 1, -2), (i, n, 4), (n, i, -2)])
        }
    };
    let lam = lam.to_vec();
    let lam2 = lam.clone();
    let tjj = move |j: i64| -> (Mono, i64) {
        let c = lam[j as usize - 1];
        if j <= n - 2 {
            (z(&[(j, j, 2), (j, j + 1, -1), (j + 2, j, -1), (j + 1, j, 2), (j + 1, j + 1, -1), (j + 2, j + 1, -1)]), c)
        } else if j == n - 1 {
            (z(&[(n - 1, n - 1, 2), (n - 1, n, -2), (n, n - 1, 2), (n, n, -2)]), c)
        } else {
            (z(&[(n, n, 4)]), c)
        }
    };
    let tt = move |i: i64, j: i64| t_block(tjj(j), (i..j).map(|k| aa(k, j)));
    let tt2 = tt.clone();
    let bb = move |i: i64, j: i64| {
        let (tz, tc) = tt2(i + 1, j);
        if j <= n - 2 {
            vec![
                term(
                    z(&[(i, j + 1, -1), (j + 2, i, -1), (j + 1, i, 2), (j, i, -1), (i, j, 1)]).plus(&tz),
                    tc,
                    1,
                    z(&[(i, j, -1)]),
                ),
                term(z(&[(j, i, -1), (j + 1, i, 1)]).plus(&tz), tc, 1, z(&[(j + 1, i, -1)])),
            ]
        } else if j == n - 1 {
            vec![
                term(z(&[(i, n, -2), (i, n - 1, 1), (n, i, 2), (n - 1, i, -1)]).plus(&tz), tc, 1, z(&[(i, n - 1, -1)])),
                term(z(&[(n - 1, i, -1), (n, i, 1)]).plus(&tz), tc, 1, z(&[(n, i, -1)])),
            ]
        } else {
            vec![term(z(&[(i, n, 2), (n, i, -2)]).plus(&tz), tc, 2, z(&[(i, n, -1)]))]
        }
    };
    let ee = move |j: i64| {
        let c = lam2[j as usize - 1];
        if j <= n - 2 {
            vec![
                term(
                    z(&[
                        (j, j, 1),
                        (j, j + 1, -1),
                        (j + 2, j, -1),
                        (j + 1, j, 2),
                        (j + 1, j + 1, -1),
                        (j + 2, j + 1, -1),
                    ]),
                    c,
                    1,
                    z(&[(j, j, -1)]),
                ),
                term(z(&[(j + 1, j, 1), (j + 1, j + 1, -1), (j + 2, j + 1, -1)]), c, 1, z(&[(j + 1, j, -1)])),
            ]
        } else if j == n - 1 {
            vec![
                term(
                    z(&[(n - 1, n - 1, 1), (n - 1, n, -2), (n, n - 1, 2), (n, n, -2)]),
                    c,
                    1,
                    z(&[(n - 1, n - 1, -1)]),
                ),
                term(z(&[(n, n - 1, 1), (n, n, -2)]), c, 1, z(&[(n, n - 1, -1)])),
            ]
        } else {
            vec![term(z(&[(n, n, 2)]), c, 2, z(&[(n, n, -1)]))]
        }
    };
    assemble(n, dd, ff, cc, tt, ee, bb)
}

/// Type B (so(2n+1)); `lam` is lambda'.
pub(crate) fn build_b(n: i64, lam: &[i64]) -> RawFamily {
    let dd = move |i: i64, j: i64| -> Mono {
        if 1 <= i && i < j && j < n {
            z(&[(i, j - 1, -1), (i, j, 1), (j + 1, i, -1), (j, i, 1)])
        } else if j == n && 1 <= i && i < n {
            z(&[(i, n - 1, -1), (n, i, 1)])
        } else {
            Mono::default()
        }
    };
    let ff = move |j: i64| {
        if j < n {
            vec![term(z(&[(j, j, -2)]), 0, 2, z(&[(j, j, 1)]))]
        } else {
            vec![term(z(&[(n, n, -1)]), 0, 1, z(&[(n, n, 1)]))]
        }
    };
    let cc = move |i: i64, j: i64| {
        if j < n {
            vec![
                term(z(&[(i, j - 1, 2), (i, j, -2)]), 0, 2, z(&[(i, j, 1)])),
                term(z(&[(j + 1, i, 2), (j, i, -2)]), 0, 2, z(&[(i, j - 1, -1), (i, j, 1), (j, i, 1)])),
            ]
        } else {
            vec![
                term(z(&[(i, n - 1, 2), (i, n, -1)]), 0, 1, z(&[(i, n, 1)])),
                term(z(&[(n, i, -2), (i, n, 1)]), 0, 1, z(&[(i, n - 1, -1), (i, n, 1), (n, i, 1)])),
            ]
        }
    };
    let aa = move |i: i64, j: i64| -> Mono {
        if j <= n - 2 {
            z(&[(i, j - 1, -2), (i, j, 4), (i, j + 1, -2), (j + 2, i, -2), (j + 1, i, 4), (j, i, -2)])
        } else if j == n - 1 {
            z(&[(i, n - 2, -2), (i, n - 1, 4), (i, n, -2), (n, i, 4), (n - 1, i, -2)])
        } else {
            z(&[(i, n - 1, -2), (i, n, 2), (n, i, -2)])
        }
    };
    let lam = lam.to_vec();
    let lam2 = lam.clone();
    let tjj = move |j: i64| -> (Mono, i64) {
        let c = lam[j as usize - 1];
        if j <= n - 2 {
            (z(&[(j, j, 4), (j, j + 1, -2), (j + 2, j, -2), (j + 1, j, 4), (j + 1, j + 1, -2), (j + 2, j + 1, -2)]), c)
        } else if j == n - 1 {
            (z(&[(n - 1, n - 1, 4), (n - 1, n, -2), (n, n - 1, 4), (n, n, -2)]), c)
        } else {
            (z(&[(n, n, 2)]), c)
        }
    };
    let tt = move |i: i64, j: i64| t_block(tjj(j), (i..j).map(|k| aa(k, j)));
    let tt2 = tt.clone();
    let bb = move |i: i64, j: i64| {
        let (tz, tc) = tt2(i + 1, j);
        if j <= n - 2 {
            vec![
                term(
                    z(&[(i, j, 2), (i, j + 1, -2), (j + 2, i, -2), (j + 1, i, 4), (j, i, -2)]).plus(&tz),
                    tc,
                    2,
                    z(&[(i, j, -1)]),
                ),
                term(z(&[(j + 1, i, 2), (j, i, -2)]).plus(&tz), tc, 2, z(&[(j + 1, i, -1)])),
            ]
        } else if j == n - 1 {
            vec![
                term(z(&[(i, n - 1, 2), (i, n, -2), (n, i, 4), (n - 1, i, -2)]).plus(&tz), tc, 2, z(&[(i, n - 1, -1)])),
                term(z(&[(n, i, 2), (n - 1, i, -2)]).plus(&tz), tc, 2, z(&[(n, i, -1)])),
            ]
        } else {
            vec![term(z(&[(i, n, 1), (n, i, -2)]).plus(&tz), tc, 1, z(&[(i, n, -1)]))]
        }
    };
    let ee = move |j: i64| {
        let c = lam2[j as usize - 1];
        if j <= n - 2 {
            vec![
                term(
                    z(&[
                        (j, j, 2),
                        (j, j + 1, -2),
                        (j + 2, j, -2),
                        (j + 1, j, 4),
                        (j + 1, j + 1, -2),
                        (j + 2, j + 1, -2),
                    ]),
                    c,
                    2,
                    z(&[(j, j, -1)]),
                ),
                term(z(&[(j + 1, j, 2), (j + 1, j + 1, -2), (j + 2, j + 1, -2)]), c, 2, z(&[(j + 1, j, -1)])),
            ]
        } else if j == n - 1 {
            vec![
                term(
                    z(&[(n - 1, n - 1, 2), (n - 1, n, -2), (n, n - 1, 4), (n, n, -2)]),
                    c,
                    2,
                    z(&[(n - 1, n - 1, -1)]),
                ),
                term(z(&[(n, n - 1, 2), (n, n, -2)]), c, 2, z(&[(n, n - 1, -1)])),
            ]
        } else {
            vec![term(z(&[(n, n, 1)]), c, 1, z(&[(n, n, -1)]))]
        }
    };
    assemble(n, dd, ff, cc, tt, ee, bb)
}

/// D_{ij} for type D as an x-monomial; indices below 1 give the identity.
pub(crate) fn d_type_d(n: i64, i: i64, j: i64) -> Mono {
    if i < 1 {
        Mono::default()
    } else if 1 <= i && i < j && j <= n - 2 {
        z(&[(i, j - 1, -1), (i, j, 1), (j + 1, i, -1), (j, i, 1)])
    } else if j == n - 1 && i < n - 1 {
        z(&[(i, n - 2, -1), (i, n - 1, 1), (i, n, -1), (n - 1, i, 1)])
    } else if j == n && i < n {
        z(&[(i, n - 2, -1), (i, n, 1), (i, n - 1, -1), (n - 1, i, 1)])
    } else {
        Mono::default()
    }
}

type DFactor = (Vec<(i64, i64)>, bool, i64, i64);

/// The D-products multiplying each F or C factor of e_j in type D, as
/// (product pairs (p, column), factor kind, factor row, factor column).
/// The last two generators have separate tables for even and odd n.
pub(crate) fn d_type_e_layout(n: i64, j: i64) -> Vec<DFactor> {
    // bool: true for an F factor, false for a C factor.
    let mut out = Vec::new();
    let pairs = |odd: &dyn Fn(i64) -> i64,
                 odd_col: i64,
                 even: &dyn Fn(i64) -> i64,
                 even_col: i64,
                 r1: std::ops::RangeInclusive<i64>,
                 r2: std::ops::RangeInclusive<i64>| {
        let mut v: Vec<(i64, i64)> = r1.map(|p| (odd(p), odd_col)).collect();
        v.extend(r2.map(|p| (even(p), even_col)));
        v
    };
    let odd = |p: i64| 2 * p - 1;
    let even = |p: i64| 2 * p;
    if j == 1 {
        out.push((Vec::new(), true, 1, 1));
    } else if j <= n - 2 {
        out.push(((1..j).map(|k| (k, j)).collect(), true, j, j));
        for q in 1..j {
            out.push(((0..q).map(|p| (p, j)).collect(), false, q, j));
        }
    } else if n % 2 == 0 {
        let h = n / 2 - 1;
        if j == n - 1 {
            out.push((pairs(&odd, n - 1, &even, n, 1..=h, 1..=h), true, n - 1, n - 1));
            for q in 1..=h {
                out.push((pairs(&odd, n - 1, &even, n, 0..=q - 1, 0..=q - 1), false, 2 * q - 1, n - 1));
                out.push((pairs(&odd, n - 1, &even, n, 0..=q, 0..=q - 1), false, 2 * q, n));
            }
        } else {
            out.push((pairs(&even, n - 1, &odd, n, 1..=h, 1..=h), true, n - 1, n));
            for q in 1..=h {
                out.push((pairs(&even, n - 1, &odd, n, 0..=q - 1, 0..=q), false, 2 * q, n - 1));
                out.push((pairs(&even, n - 1, &odd, n, 0..=q - 1, 0..=q - 1), false, 2 * q - 1, n));
            }
        }
    } else {
        let h1 = (n - 1) / 2;
        let h3 = (n - 3) / 2;
        if j == n - 1 {
            out.push((pairs(&odd, n - 1, &even, n, 1..=h1, 1..=h3), true, n - 1, n));
            for q in 1..=h1 {
                out.push((pairs(&odd, n - 1, &even, n, 0..=q - 1, 0..=q - 1), false, 2 * q - 1, n - 1));
            }
            for q in 1..=h3 {
                out.push((pairs(&odd, n - 1, &even, n, 0..=q, 0..=q - 1), false, 2 * q, n));
            }
        } else {
            out.push((pairs(&even, n - 1, &odd, n, 1..=h3, 1..=h1), true, n - 1, n - 1));
            for q in 1..=h3 {
                out.push((pairs(&even, n - 1, &odd, n, 0..=q - 1, 0..=q), false, 2 * q, n - 1));
            }
            for q in 1..=h1 {
                out.push((pairs(&even, n - 1, &odd, n, 0..=q - 1, 0..=q - 1), false, 2 * q - 1, n));
            }
        }
    }
    out
}

/// Type D (so(2n)); `lam` is lambda'.
pub(crate) fn build_d(n: i64, lam: &[i64]) -> RawFamily {
    let ff = |i: i64, j: i64| vec![term(z(&[(i, j, -1)]), 0, 1, z(&[(i, j, 1)]))];
    let cc = |i: i64, j: i64| {
        if j <= n - 2 {
            vec![
                term(z(&[(i, j - 1, 1), (i, j, -1)]), 0, 1, z(&[(i, j, 1)])),
                term(z(&[(j + 1, i, 1), (j, i, -1)]), 0, 1, z(&[(i, j - 1, -1), (i, j, 1), (j, i, 1)])),
            ]
        } else if j == n - 1 {
            vec![
                term(z(&[(i, n - 2, 1), (i, n - 1, -1)]), 0, 1, z(&[(i, n - 1, 1)])),
                term(z(&[(i, n, 1), (n - 1, i, -1)]), 0, 1, z(&[(i, n - 2, -1), (i, n - 1, 1), (n - 1, i, 1)])),
            ]
        } else {
            vec![
                term(z(&[(i, n - 2, 1), (i, n, -1)]), 0, 1, z(&[(i, n, 1)])),
                term(z(&[(i, n - 1, 1), (n - 1, i, -1)]), 0, 1, z(&[(i, n - 2, -1), (i, n, 1), (n - 1, i, 1)])),
            ]
        }
    };
    let aa = |i: i64, j: i64| -> Mono {
        if j <= n - 3 {
            z(&[(i, j - 1, -1), (i, j, 2), (i, j + 1, -1), (j + 2, i, -1), (j + 1, i, 2), (j, i, -1)])
        } else if j == n - 2 {
            z(&[(i, n - 3, -1), (i, n - 2, 2), (i, n - 1, -1), (i, n, -1), (n - 1, i, 2), (n - 2, i, -1)])
        } else if j == n - 1 {
            z(&[(i, n - 2, -1), (i, n - 1, 2), (n - 1, i, -1)])
        } else {
            z(&[(i, n - 2, -1), (i, n, 2), (n - 1, i, -1)])
        }
    };
    let tjj = |j: i64| -> (Mono, i64) {
        let c = lam[j as usize - 1];
        if j <= n - 3 {
            (z(&[(j, j, 2), (j, j + 1, -1), (j + 2, j, -1), (j + 1, j, 2), (j + 1, j + 1, -1), (j + 2, j + 1, -1)]), c)
        } else if j == n - 2 {
            (
                z(&[
                    (n - 2, n - 2, 2),
                    (n - 2, n - 1, -1),
                    (n - 2, n, -1),
                    (n - 1, n - 2, 2),
                    (n - 1, n - 1, -1),
                    (n - 1, n, -1),
                ]),
                c,
            )
        } else if j == n - 1 {
            (z(&[(n - 1, n - 1, 2)]), c)
        } else {
            (z(&[(n - 1, n, 2)]), c)
        }
    };
    let tt = |i: i64, j: i64| {
        let top = if j < n { j - 1 } else { n - 2 };
        t_block(tjj(j), (i..=top).map(|k| aa(k, j)))
    };
    let bb = |i: i64, j: i64| {
        let (tz, tc) = tt(i + 1, j);
        if j <= n - 3 {
            vec![
                term(
                    z(&[(i, j, 1), (i, j + 1, -1), (j + 2, i, -1), (j + 1, i, 2), (j, i, -1)]).plus(&tz),
                    tc,
                    1,
                    z(&[(i, j, -1)]),
                ),
                term(z(&[(j + 1, i, 1), (j, i, -1)]).plus(&tz), tc, 1, z(&[(j + 1, i, -1)])),
            ]
        } else if j == n - 2 {
            vec![
                term(
                    z(&[(i, n - 2, 1), (i, n - 1, -1), (i, n, -1), (n - 1, i, 2), (n - 2, i, -1)]).plus(&tz),
                    tc,
                    1,
                    z(&[(i, n - 2, -1)]),
                ),
                term(z(&[(n - 1, i, 1), (n - 2, i, -1)]).plus(&tz), tc, 1, z(&[(n - 1, i, -1)])),
            ]
        } else if j == n - 1 {
            vec![term(z(&[(i, n - 1, 1), (n - 1, i, -1)]).plus(&tz), tc, 1, z(&[(i, n - 1, -1)]))]
        } else {
            vec![term(z(&[(i, n, 1), (n - 1, i, -1)]).plus(&tz), tc, 1, z(&[(i, n, -1)]))]
        }
    };
    let ee = |j: i64| {
        let c = lam[j as usize - 1];
        if j <= n - 3 {
            vec![
                term(
                    z(&[
                        (j, j, 1),
                        (j, j + 1, -1),
                        (j + 2, j, -1),
                        (j + 1, j, 2),
                        (j + 1, j + 1, -1),
                        (j + 2, j + 1, -1),
                    ]),
                    c,
                    1,
                    z(&[(j, j, -1)]),
                ),
                term(z(&[(j + 1, j, 1), (j + 1, j + 1, -1), (j + 2, j + 1, -1)]), c, 1, z(&[(j + 1, j, -1)])),
            ]
        } else if j == n - 2 {
            vec![
                term(
                    z(&[
                        (n - 2, n - 2, 1),
                        (n - 2, n - 1, -1),
                        (n - 2, n, -1),
                        (n - 1, n - 2, 2),
                        (n - 1, n - 1, -1),
                        (n - 1, n, -1),
                    ]),
                    c,
                    1,
                    z(&[(n - 2, n - 2, -1)]),
                ),
                term(z(&[(n - 1, n - 2, 1), (n - 1, n - 1, -1), (n - 1, n, -1)]), c, 1, z(&[(n - 1, n - 2, -1)])),
            ]
        } else if j == n - 1 {
            vec![term(z(&[(n - 1, n - 1, 1)]), c, 1, z(&[(n - 1, n - 1, -1)]))]
        } else {
            vec![term(z(&[(n - 1, n, 1)]), c, 1, z(&[(n - 1, n, -1)]))]
        }
    };
    let mut fam = RawFamily { e: Vec::new(), f: Vec::new(), t: Vec::new() };
    for j in 1..=n {
        let mut terms = Vec::new();
        for (pairs, is_f, r, c) in d_type_e_layout(n, j) {
            let dx = Mono::sum(&pairs.iter().map(|&(p, col)| d_type_d(n, p, col)).collect::<Vec<_>>());
            let factor = if is_f { ff(r, c) } else { cc(r, c) };
            terms.extend(left_all(&dx, factor));
        }
        fam.e.push(terms);
        fam.t.push(t_of(tt(1, j)));
        let top = if j <= n - 2 { j - 1 } else { n - 2 };
        let mut f = ee(j);
        for i in 1..=top {
            f.extend(bb(i, j));
        }
        fam.f.push(f);
    }
    fam
}
