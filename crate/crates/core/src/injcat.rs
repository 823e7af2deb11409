//! The category of finite sets `{1, .., n}` and injective maps.
//!
//! Elements are 1-based throughout. An [`Injection`] stores its image as the
//! dense sequence `[f(1), .., f(m)]`; a [`Permutation`] additionally caches
//! its inverse so both directions apply in O(1).
//!
//! Every injection factors uniquely as an order-preserving injection
//! followed by a permutation of the source; [`factorize`] computes that pair
//! and [`star_action`] is the same factorization applied to `sigma ∘ alpha`.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InjcatError {
    #[error("value {value} at position {position} is outside 1..={target}")]
    OutOfRange {
        position: usize,
        value: usize,
        target: usize,
    },
    #[error("positions {first} and {second} map to the same value")]
    NotInjective { first: usize, second: usize },
}

/// Injective map `f: {1, .., m} -> {1, .., n}`, stored as `[f(1), .., f(m)]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Injection {
    target: usize,
    image: Vec<usize>,
}

impl Injection {
    pub fn new(target: usize, image: Vec<usize>) -> Result<Self, InjcatError> {
        let mut seen = vec![usize::MAX; target];
        for (pos, &v) in image.iter().enumerate() {
            if v == 0 || v > target {
                return Err(InjcatError::OutOfRange {
                    position: pos + 1,
                    value: v,
                    target,
                });
            }
            if seen[v - 1] != usize::MAX {
                return Err(InjcatError::NotInjective {
                    first: seen[v - 1] + 1,
                    second: pos + 1,
                });
            }
            seen[v - 1] = pos;
        }
        Ok(Injection { target, image })
    }

    pub fn identity(n: usize) -> Self {
        Injection {
            target: n,
            image: (1..=n).collect(),
        }
    }

    /// The unique map from the empty set into `{1, .., n}`.
    pub fn empty(target: usize) -> Self {
        Injection {
            target,
            image: Vec::new(),
        }
    }

    pub fn source(&self) -> usize {
        self.image.len()
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, i: usize) -> usize {
        assert!(
            1 <= i && i <= self.source(),
            "argument {i} outside source 1..={}",
            self.source()
        );
        self.image[i - 1]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Injection) -> Injection {
        assert_eq!(
            other.target,
            self.source(),
            "composition mismatch: {} -> {} then {} -> {}",
            other.source(),
            other.target,
            self.source(),
            self.target
        );
        Injection {
            target: self.target,
            image: other.image.iter().map(|&v| self.image[v - 1]).collect(),
        }
    }

    /// Concatenation `f ⊔ g: m+p -> n+q`, with `g` shifted past `f`.
    pub fn concat(&self, other: &Injection) -> Injection {
        let mut image = self.image.clone();
        image.extend(other.image.iter().map(|&v| v + self.target));
        Injection {
            target: self.target + other.target,
            image,
        }
    }

    pub fn is_order_preserving(&self) -> bool {
        self.image.windows(2).all(|w| w[0] < w[1])
    }
}

impl fmt::Debug for Injection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}->{}", self.image, self.target)
    }
}

/// Permutation of `{1, .., n}` with its inverse cached.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    forward: Vec<usize>,
    inverse: Vec<usize>,
}

impl Permutation {
    pub fn from_image(image: Vec<usize>) -> Result<Self, InjcatError> {
        let n = image.len();
        let inj = Injection::new(n, image)?;
        let mut inverse = vec![0; n];
        for (pos, &v) in inj.image.iter().enumerate() {
            inverse[v - 1] = pos + 1;
        }
        Ok(Permutation {
            forward: inj.image,
            inverse,
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            forward: (1..=n).collect(),
            inverse: (1..=n).collect(),
        }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a >= 1 && b >= 1 && a <= n && b <= n && a != b);
        let mut forward: Vec<usize> = (1..=n).collect();
        forward.swap(a - 1, b - 1);
        let inverse = forward.clone();
        Permutation { forward, inverse }
    }

    pub fn degree(&self) -> usize {
        self.forward.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        assert!(1 <= i && i <= self.degree());
        self.forward[i - 1]
    }

    pub fn apply_inverse(&self, i: usize) -> usize {
        assert!(1 <= i && i <= self.degree());
        self.inverse[i - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.forward
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        let forward: Vec<usize> = other.forward.iter().map(|&v| self.forward[v - 1]).collect();
        let inverse: Vec<usize> = self.inverse.iter().map(|&v| other.inverse[v - 1]).collect();
        Permutation { forward, inverse }
    }

    /// `self ⊕ other` acting on `{1, .., n+m}` blockwise.
    pub fn block_sum(&self, other: &Permutation) -> Permutation {
        let n = self.degree();
        let mut forward = self.forward.clone();
        forward.extend(other.forward.iter().map(|&v| v + n));
        let mut inverse = self.inverse.clone();
        inverse.extend(other.inverse.iter().map(|&v| v + n));
        Permutation { forward, inverse }
    }

    pub fn is_identity(&self) -> bool {
        self.forward.iter().enumerate().all(|(pos, &v)| v == pos + 1)
    }

    pub fn as_injection(&self) -> Injection {
        Injection {
            target: self.degree(),
            image: self.forward.clone(),
        }
    }

    /// All permutations of `{1, .., n}` in lexicographic image order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut image: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation::from_image(image.clone()).unwrap());
            let Some(i) = image.windows(2).rposition(|w| w[0] < w[1]) else {
                break;
            };
            let j = image.iter().rposition(|&v| v > image[i]).unwrap();
            image.swap(i, j);
            image[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.forward)
    }
}

/// Unique factorization `f = ord ∘ perm` with `ord` order-preserving
/// injective and `perm` a permutation of the source.
pub fn factorize(f: &Injection) -> (Injection, Permutation) {
    let m = f.source();
    let mut by_rank: Vec<usize> = (0..m).collect();
    by_rank.sort_by_key(|&pos| f.image[pos]);
    let ord_image: Vec<usize> = by_rank.iter().map(|&pos| f.image[pos]).collect();
    let mut perm_image = vec![0; m];
    for (rank, &pos) in by_rank.iter().enumerate() {
        perm_image[pos] = rank + 1;
    }
    let ord = Injection {
        target: f.target,
        image: ord_image,
    };
    let perm = Permutation::from_image(perm_image).unwrap();
    (ord, perm)
}

/// Factorization of `sigma ∘ alpha` as (pushforward, pullback): the
/// pushforward is order-preserving injective, the pullback is a permutation
/// of the source, and `sigma ∘ alpha = pushforward ∘ pullback`.
pub fn star_action(alpha: &Injection, sigma: &Permutation) -> (Injection, Permutation) {
    assert_eq!(
        alpha.target(),
        sigma.degree(),
        "star_action: target {} does not match permutation degree {}",
        alpha.target(),
        sigma.degree()
    );
    factorize(&sigma.as_injection().compose(alpha))
}

/// Block shuffle `{1,..,n} ⊔ {1,..,m} -> {1,..,m} ⊔ {1,..,n}`:
/// `i ↦ i+m` for `i <= n` and `i ↦ i−n` for `i > n`.
pub fn shuffle(n: usize, m: usize) -> Permutation {
    let image: Vec<usize> = (1..=n + m)
        .map(|i| if i <= n { i + m } else { i - n })
        .collect();
    Permutation::from_image(image).unwrap()
}
