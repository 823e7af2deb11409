//! Named example rings and monoids used by the command line tool and the
//! test suites.

use crate::barcons::{FiniteMonoid, FiniteRing};

/// Additive cyclic group of order n, elements 0..n with addition mod n.
pub fn cyclic_group(n: usize) -> FiniteMonoid {
    assert!(n >= 1);
    let labels = (0..n).map(|a| a.to_string()).collect();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    FiniteMonoid::new(&format!("Z/{n}"), labels, &table).expect("cyclic group tables are valid")
}

fn modular_ring(n: usize) -> FiniteRing {
    let labels = (0..n).map(|a| a.to_string()).collect();
    let add: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    let mul: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| (a * b) % n).collect())
        .collect();
    FiniteRing::new(&format!("Z/{n}"), labels, &add, &mul).expect("modular ring tables are valid")
}

pub fn z2() -> FiniteRing {
    modular_ring(2)
}

pub fn z3() -> FiniteRing {
    modular_ring(3)
}

pub fn z4() -> FiniteRing {
    modular_ring(4)
}

/// Dual numbers over the field with two elements: a + b*eps with eps^2 = 0.
/// Encoding: bit 0 is the constant term, bit 1 the eps coefficient.
pub fn f2x() -> FiniteRing {
    let labels = vec!["0".into(), "1".into(), "x".into(), "1+x".into()];
    let add: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
    let mul: Vec<Vec<usize>> = (0..4)
        .map(|a| {
            (0..4)
                .map(|b| {
                    let c0 = (a & 1) & (b & 1);
                    let c1 = ((a & 1) & (b >> 1)) ^ ((a >> 1) & (b & 1));
                    c0 | (c1 << 1)
                })
                .collect()
        })
        .collect();
    FiniteRing::new("F2[x]/(x^2)", labels, &add, &mul).expect("dual number tables are valid")
}

/// 2x2 matrices over the field with two elements.
pub fn m2z2() -> FiniteRing {
    z2().matrix_ring(2).expect("16 elements is within the guard")
}

/// Invertible 2x2 matrices over the field with two elements; a
/// non-commutative group of order 6.
pub fn gl2z2() -> FiniteMonoid {
    m2z2().units()
}

pub fn ring_by_name(name: &str) -> Option<FiniteRing> {
    match name {
        "z2" => Some(z2()),
        "z3" => Some(z3()),
        "z4" => Some(z4()),
        "f2x" => Some(f2x()),
        _ => None,
    }
}

/// Monoid behind a built-in name. Ring names resolve to the additive
/// group, which is the interesting input for bar constructions.
pub fn monoid_by_name(name: &str) -> Option<FiniteMonoid> {
    match name {
        "z2" | "z3" | "z4" | "f2x" => {
            ring_by_name(name).map(|r| r.additive_monoid().clone())
        }
        "gl2z2" => Some(gl2z2()),
        _ => None,
    }
}
