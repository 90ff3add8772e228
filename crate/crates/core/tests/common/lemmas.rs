//! The combinatorial facts about P_n and D_n, as assertion-based checks shared
//! by the lemma tests and the acceptance runner.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use super::{a3_divides, a3_points, in_a3_dual, v};
use nashfan::nash::{dn_set, l_n, phi_linear, pn_family, psi, theta, A3Context};
use nashfan::LatticeVector;

pub const REGION: i64 = 60;

fn in_upper_set(b: &LatticeVector, gens: &BTreeSet<LatticeVector>) -> bool {
    gens.iter().any(|a| a3_divides(a, b))
}

/// Whether b is on or to the right of the broken line through P_n (by height),
/// continued along the x-axis below p_n and along (3,4) above s_n.
fn right_of_line(n: u32, b: &LatticeVector) -> bool {
    let pts = pn_family(n).points();
    let last = *pts.last().unwrap();
    if b.y >= last.y {
        // 4(x - s.x) >= 3(y - s.y)
        return 4 * (b.x - last.x) >= 3 * (b.y - last.y);
    }
    for w in pts.windows(2) {
        let (a, c) = (w[0], w[1]);
        if a.y <= b.y && b.y < c.y {
            // x >= a.x + (c.x - a.x)(y - a.y)/(c.y - a.y)
            return (b.x - a.x) * (c.y - a.y) >= (c.x - a.x) * (b.y - a.y);
        }
    }
    unreachable!("P_n starts at height 0")
}

pub fn inner_identities(n_max: u32) {
    for n in 1..=n_max {
        let f = pn_family(n);
        if n % 2 == 1 {
            let h = ((n - 1) / 2) as usize;
            assert_eq!(f.p, f.q[h] - v(0, 1), "n={n}");
            assert_eq!(f.s, f.r[h] + v(1, 2), "n={n}");
        } else {
            assert_eq!(f.p, f.q[((n - 2) / 2) as usize] - v(1, 2), "n={n}");
            assert_eq!(f.s, f.r[(n / 2) as usize] + v(2, 3), "n={n}");
        }
    }
}

pub fn broken_line_has_no_interior_lattice_points(n_max: u32) {
    for n in 1..=n_max {
        let pts = pn_family(n).points();
        for w in pts.windows(2) {
            let d = w[1] - w[0];
            assert_eq!(num_integer::gcd(d.x, d.y), 1, "n={n} segment {} {}", w[0], w[1]);
            assert!(d.y > 0);
        }
    }
}

pub fn family_size_and_antichain(n_max: u32) {
    for n in 1..=n_max {
        let pts = pn_family(n).points();
        let s: BTreeSet<_> = pts.iter().copied().collect();
        assert_eq!(s.len() as u32, n + 3, "n={n}");
        assert!(pts.iter().all(in_a3_dual));
        for a in &pts {
            for b in &pts {
                if a != b {
                    assert!(!a3_divides(a, b), "n={n}: {a} divides {b}");
                }
            }
        }
    }
}

pub fn end_point_chains(n_max: u32) {
    for n in 1..=n_max {
        let (cur, next) = (pn_family(n), pn_family(n + 1));
        if n % 2 == 1 {
            assert_eq!(cur.p, next.p, "n={n}");
            if n >= 3 {
                assert_eq!(pn_family(n - 1).p + v(1, 0), cur.p, "n={n}");
            }
        } else {
            assert_eq!(pn_family(n - 1).s + v(3, 4), cur.s, "n={n}");
            assert_eq!(cur.s, next.s, "n={n}");
        }
    }
}

pub fn shift_by_one_one(n_max: u32) {
    for n in 1..=n_max {
        let (cur, next) = (pn_family(n), pn_family(n + 1));
        for (i, a) in cur.q.iter().enumerate() {
            assert_eq!(theta(a), next.q[i], "n={n} q^{i}");
        }
        for (j, a) in cur.r.iter().enumerate() {
            assert_eq!(theta(a), next.r[j], "n={n} r^{j}");
        }
        if n % 2 == 1 {
            assert_eq!(theta(&cur.s), next.r[n.div_ceil(2) as usize], "n={n}");
        } else {
            assert_eq!(theta(&cur.p), next.q[(n / 2) as usize], "n={n}");
        }
    }
}

pub fn consecutive_families(n_max: u32) {
    for n in 1..=n_max {
        let (cur, next) = (pn_family(n).as_set(), pn_family(n + 1));
        let common: BTreeSet<_> = cur.intersection(&next.as_set()).copied().collect();
        let shared = if n % 2 == 1 { pn_family(n).p } else { pn_family(n).s };
        assert_eq!(common, [shared].into_iter().collect(), "n={n}");

        let dropped: BTreeSet<_> = cur.difference(&next.as_set()).copied().collect();
        let mut rebuilt: BTreeSet<_> = dropped.iter().map(theta).collect();
        assert_eq!(rebuilt.len(), dropped.len());
        assert!(!rebuilt.contains(&next.p) && !rebuilt.contains(&next.s));
        rebuilt.insert(next.p);
        rebuilt.insert(next.s);
        assert_eq!(rebuilt, next.as_set(), "n={n}");
    }
}

pub fn upper_sets_nest(n_max: u32) {
    let region = a3_points(REGION);
    for n in 1..=n_max {
        let (cur, next) = (pn_family(n).as_set(), pn_family(n + 1).as_set());
        let dropped: BTreeSet<_> = cur.difference(&next).copied().collect();
        for b in &region {
            let lhs = in_upper_set(b, &cur);
            let in_dropped = dropped.contains(b);
            let in_next = in_upper_set(b, &next);
            assert!(!(in_dropped && in_next), "n={n}: {b} in both parts");
            assert_eq!(lhs, in_dropped || in_next, "n={n}: {b}");
        }
    }
}

pub fn upper_set_is_region_right_of_line(n_max: u32) {
    let region = a3_points(REGION);
    for n in 1..=n_max {
        let pn = pn_family(n).as_set();
        let dn = dn_set(n);
        for b in &region {
            let above = in_upper_set(b, &pn);
            assert_eq!(above, right_of_line(n, b), "n={n}: {b}");
            assert_eq!(!above, dn.contains(b), "n={n}: {b}");
        }
        assert!(dn.iter().all(|a| a.x + a.y <= REGION));
    }
}

pub fn standard_sets(n_max: u32) {
    assert_eq!(dn_set(1), super::set(&[(0, 0), (1, 0), (1, 1)]));
    for n in 1..=n_max {
        let (cur, next) = (dn_set(n), dn_set(n + 1));
        assert_eq!(cur.len() as u32, (n + 1) * (n + 2) / 2, "n={n}");
        assert!(cur.iter().all(|a| next.contains(&theta(a))), "n={n}");
        assert!(cur.is_subset(&next));
        if n >= 2 {
            let prev = dn_set(n - 1);
            let dropped: BTreeSet<_> = pn_family(n - 1).as_set().difference(&pn_family(n).as_set()).copied().collect();
            assert!(prev.is_disjoint(&dropped));
            assert_eq!(cur.len(), prev.len() + dropped.len());
            assert_eq!(cur.len() - prev.len(), (n + 1) as usize);
        }
    }
}

pub fn antidiagonal_images(n_max: u32) {
    for n in 1..=n_max as i64 {
        let dn = dn_set(n as u32);
        let image: BTreeSet<i64> = dn.iter().map(phi_linear).collect();
        if n % 2 == 1 {
            let h = (n + 1) / 2;
            assert_eq!(image, (-h..h).collect(), "n={n}");
        } else {
            let h = n / 2;
            assert_eq!(image, (-h..=h).collect(), "n={n}");
            let top: Vec<_> = dn.iter().filter(|a| phi_linear(a) == h).collect();
            assert_eq!(top, vec![&pn_family(n as u32 - 1).s], "n={n}");
        }
    }
}

pub fn p_n_dominates_standard_set(n_max: u32) {
    let a3 = A3Context::new();
    for n in 1..=n_max {
        let p = pn_family(n).p;
        for a in dn_set(n) {
            assert_eq!(a3.ordering().compare(&p, &a), Ordering::Greater, "n={n}: {a}");
        }
    }
}

pub fn separating_functional(n_max: u32) {
    for n in 2..=n_max {
        let (cur, prev) = (pn_family(n), pn_family(n - 1));
        let dn = dn_set(n);
        let max_d = dn.iter().map(|a| psi(n, a)).max().unwrap();
        let min_p = cur.points().iter().map(|a| psi(n, a)).min().unwrap();
        assert_eq!(max_d, min_p, "n={n}");
        let k = i64::from(n);
        if n % 2 == 1 {
            assert_eq!(max_d, psi(n, prev.r.last().unwrap()));
            assert_eq!(min_p, psi(n, cur.q.last().unwrap()));
            assert_eq!(max_d, (k - 1) * (k + 2) + 1);
        } else {
            assert_eq!(max_d, psi(n, &prev.s));
            assert_eq!(min_p, psi(n, &cur.p));
            assert_eq!(max_d, k * (k + 2));
        }
        assert!(dn.iter().all(|a| psi(n, a) >= 0));
        assert_eq!(l_n(n).dot(&v(1, 0)), psi(n, &v(1, 0)));
    }
}

pub fn all(n_max: u32) {
    inner_identities(n_max);
    broken_line_has_no_interior_lattice_points(n_max);
    family_size_and_antichain(n_max);
    end_point_chains(n_max);
    shift_by_one_one(n_max);
    consecutive_families(n_max);
    upper_sets_nest(n_max);
    upper_set_is_region_right_of_line(n_max);
    standard_sets(n_max);
    antidiagonal_images(n_max);
    p_n_dominates_standard_set(n_max);
    separating_functional(n_max);
}
