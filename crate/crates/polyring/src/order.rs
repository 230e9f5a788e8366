use std::cmp::Ordering;

use crate::Monomial;

/// A term order on monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[derive(Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic order.
    #[default]
    DegRevLex,
    /// Pure lexicographic order; `priority[0]` is the most significant
    /// variable. Variables missing from the list rank below all listed ones,
    /// in index order.
    Lex(Vec<usize>),
    /// Elimination order: degrevlex on the `elim` variables, ties broken by
    /// degrevlex on the remaining ones.
    Block(Vec<usize>),
}


fn degrevlex_on(a: &[u32], b: &[u32], keep: impl Fn(usize) -> bool) -> Ordering {
    let da: u32 = (0..a.len()).filter(|&i| keep(i)).map(|i| a[i]).sum();
    let db: u32 = (0..b.len()).filter(|&i| keep(i)).map(|i| b[i]).sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev().filter(|&i| keep(i)) {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => continue,
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::DegRevLex => degrevlex_on(ea, eb, |_| true),
            MonomialOrder::Lex(priority) => {
                for &i in priority {
                    match ea[i].cmp(&eb[i]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                for i in (0..ea.len()).filter(|i| !priority.contains(i)) {
                    match ea[i].cmp(&eb[i]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block(elim) => degrevlex_on(ea, eb, |i| elim.contains(&i))
                .then_with(|| degrevlex_on(ea, eb, |i| !elim.contains(&i))),
        }
    }

    /// True if every monomial involving an eliminated variable is larger than
    /// every monomial free of them. Holds for `Block` and for `Lex` orders
    /// whose priority list starts with the given variables.
    pub fn eliminates(&self, vars: &[usize]) -> bool {
        match self {
            MonomialOrder::DegRevLex => vars.is_empty(),
            MonomialOrder::Block(elim) => vars.iter().all(|v| elim.contains(v)),
            MonomialOrder::Lex(priority) => vars
                .iter()
                .all(|v| priority.iter().position(|p| p == v).is_some_and(|pos| pos < vars.len())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::DegRevLex;
        // x^2 > xy > y^2 > xz > yz > z^2 in three variables
        let chain = [[2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2]];
        for w in chain.windows(2) {
            assert_eq!(o.compare(&m(&w[0]), &m(&w[1])), Ordering::Greater);
        }
        assert_eq!(o.compare(&m(&[0, 0, 1]), &m(&[1, 1, 0])), Ordering::Less);
    }

    #[test]
    fn lex_and_block() {
        let lex = MonomialOrder::Lex(vec![0, 1]);
        assert_eq!(lex.compare(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        let block = MonomialOrder::Block(vec![2]);
        assert_eq!(block.compare(&m(&[0, 0, 1]), &m(&[4, 4, 0])), Ordering::Greater);
        assert_eq!(block.compare(&m(&[2, 0, 1]), &m(&[0, 1, 1])), Ordering::Greater);
        assert!(block.eliminates(&[2]));
        assert!(!block.eliminates(&[1]));
        assert!(MonomialOrder::Lex(vec![2, 0]).eliminates(&[2]));
    }
}
