use std::collections::{HashMap, VecDeque};

use crate::closure::DEFAULT_CAP;
use crate::diagram::Diagram;
use crate::error::{FramoidError, Result};
use crate::family::MonoidFamily;

/// Fewest non-bead generators in any word of `fam` evaluating to `x`, by 0-1 breadth
/// first search from the identity (bead generators cost nothing).
pub fn min_length_oracle(x: &Diagram, fam: &MonoidFamily) -> Result<usize> {
    let gens: Vec<(Diagram, usize)> = fam
        .generator_symbols()
        .into_iter()
        .map(|g| Ok((fam.realize(g)?, usize::from(!g.is_bead()))))
        .collect::<Result<_>>()?;
    let policy = fam.policy();
    let mut dist: HashMap<Diagram, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    let id = fam.identity();
    dist.insert(id.clone(), 0);
    queue.push_back((id, 0));
    while let Some((y, dy)) = queue.pop_front() {
        if dist.get(&y).is_some_and(|&best| best < dy) {
            continue;
        }
        if &y == x {
            return Ok(dy);
        }
        for (g, cost) in &gens {
            let z = y.compose_raw(g, policy, &mut |_| {});
            let dz = dy + cost;
            if dist.get(&z).is_none_or(|&best| dz < best) {
                dist.insert(z.clone(), dz);
                if *cost == 0 {
                    queue.push_front((z, dz));
                } else {
                    queue.push_back((z, dz));
                }
                if dist.len() > DEFAULT_CAP {
                    return Err(FramoidError::CapExceeded { cap: DEFAULT_CAP });
                }
            }
        }
    }
    Err(FramoidError::Mismatch(format!("{x} is not in {}", fam.key())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    #[test]
    fn small_distances() {
        let fam = MonoidFamily::by_key("jn", 1, 5).unwrap();
        let eval = |w: &str| fam.evaluate_word(&parse_word(w).unwrap()).unwrap().0;
        assert_eq!(min_length_oracle(&fam.identity(), &fam).unwrap(), 0);
        assert_eq!(min_length_oracle(&eval("t1"), &fam).unwrap(), 1);
        assert_eq!(min_length_oracle(&eval("t2 t1 t3 t2 t4"), &fam).unwrap(), 5);
    }

    #[test]
    fn beads_are_free() {
        let fam = MonoidFamily::by_key("jdn", 3, 3).unwrap();
        let x = fam.evaluate_word(&parse_word("o1 t1 o3^2").unwrap()).unwrap().0;
        assert_eq!(min_length_oracle(&x, &fam).unwrap(), 1);
    }
}
