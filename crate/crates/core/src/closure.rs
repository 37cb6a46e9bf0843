//! Breadth-first enumeration of the monoid generated by a family's generators.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::diagram::Diagram;
use crate::error::{FramoidError, Result};
use crate::family::MonoidFamily;

pub const DEFAULT_CAP: usize = 1_000_000;

/// All elements reachable from the identity by right multiplication with generators,
/// sorted by the canonical ordering of diagrams. Fails once more than `cap` elements
/// have been found.
pub fn closure(fam: &MonoidFamily, cap: usize) -> Result<Vec<Diagram>> {
    let gens = fam.generating_set()?;
    let policy = fam.policy();
    let id = fam.identity();
    let mut seen: HashSet<Diagram> = HashSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        // products are computed in parallel but inserted in a fixed order
        let products: Vec<Diagram> = frontier
            .par_iter()
            .flat_map_iter(|x| {
                gens.iter()
                    .map(move |g| x.compose_raw(g, policy, &mut |_| {}))
            })
            .collect();
        let mut next = Vec::new();
        for p in products {
            if !seen.contains(&p) {
                seen.insert(p.clone());
                next.push(p);
                if seen.len() > cap {
                    return Err(FramoidError::CapExceeded { cap });
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Diagram> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Number of distinct elements, without keeping the sorted list.
pub fn count(fam: &MonoidFamily, cap: usize) -> Result<usize> {
    closure(fam, cap).map(|v| v.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_closures() {
        let f = MonoidFamily::by_key("jn", 1, 4).unwrap();
        assert_eq!(count(&f, DEFAULT_CAP).unwrap(), 14);
        let f = MonoidFamily::by_key("sdn", 2, 3).unwrap();
        assert_eq!(count(&f, DEFAULT_CAP).unwrap(), 48);
    }

    #[test]
    fn cap_is_enforced() {
        let f = MonoidFamily::by_key("brn", 1, 4).unwrap();
        assert_eq!(closure(&f, 10), Err(FramoidError::CapExceeded { cap: 10 }));
    }

    #[test]
    fn output_is_sorted_and_deterministic() {
        let f = MonoidFamily::by_key("jdn", 2, 3).unwrap();
        let a = closure(&f, DEFAULT_CAP).unwrap();
        let b = closure(&f, DEFAULT_CAP).unwrap();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
    }
}
