use std::fmt;

use super::Poset;

/// Row-major relation matrix of a poset under its canonical labelling, the
/// lexicographically smallest over all relabellings.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<bool>);

impl CanonicalCode {
    pub fn bits(&self) -> &[bool] {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    /// Hex digits of the bit string, most significant first, padded to a nibble.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for chunk in self.0.chunks(4) {
            let mut v = 0u8;
            for (k, &b) in chunk.iter().enumerate() {
                if b {
                    v |= 8 >> k;
                }
            }
            write!(f, "{v:x}")?;
        }
        Ok(())
    }
}

struct Search<'a> {
    p: &'a Poset,
    best: Option<(Vec<bool>, Vec<usize>)>,
}

impl Poset {
    /// Returns the canonical code together with the labelling achieving it:
    /// `perm[i]` is the new index of element `i`.
    ///
    /// A lex-minimal labelling is always a reverse linear extension: row `i`
    /// is `[p_i <= p_0 .. p_{i-1}] 1 [0 ..]` when `p_i` is maximal among the
    /// elements not yet placed, and any non-maximal choice loses to a maximal
    /// element above it with the same prefix. So only maximal candidates with
    /// the smallest prefix need to be branched on.
    pub fn canonical_labelling(&self) -> (CanonicalCode, Vec<usize>) {
        let n = self.size();
        let mut search = Search { p: self, best: None };
        let mut placed = Vec::with_capacity(n);
        let mut code = Vec::with_capacity(n * n);
        search.run(&mut placed, &mut vec![false; n], &mut code);
        let (code, placed) = search.best.expect("search always completes");
        let mut perm = vec![0; n];
        for (new, &old) in placed.iter().enumerate() {
            perm[old] = new;
        }
        (CanonicalCode(code), perm)
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        self.canonical_labelling().0
    }

    /// The poset relabelled canonically, with default labels.
    pub fn canonical_form(&self) -> Poset {
        let (_, perm) = self.canonical_labelling();
        let q = self.relabel(&perm);
        let n = q.size();
        q.with_labels((0..n).map(|i| i.to_string()).collect())
            .expect("same size")
    }
}

impl Search<'_> {
    fn run(&mut self, placed: &mut Vec<usize>, used: &mut Vec<bool>, code: &mut Vec<bool>) {
        let p = self.p;
        let n = p.size();
        let i = placed.len();
        if let Some((best, _)) = &self.best {
            // rows 0..i are final, so a larger prefix can never win
            if code.as_slice() > &best[..code.len()] {
                return;
            }
        }
        if i == n {
            if self.best.as_ref().is_none_or(|(b, _)| code.as_slice() < b.as_slice()) {
                self.best = Some((code.clone(), placed.clone()));
            }
            return;
        }
        let maximal: Vec<usize> = (0..n)
            .filter(|&c| !used[c] && !(0..n).any(|d| !used[d] && p.lt(c, d)))
            .collect();
        let prefixes: Vec<Vec<bool>> = maximal
            .iter()
            .map(|&c| placed.iter().map(|&q| p.leq(c, q)).collect())
            .collect();
        let min_prefix = prefixes.iter().min().expect("nonempty remainder").clone();

        let row_start = i * n;
        let mut row = min_prefix.clone();
        row.push(true);
        row.resize(n, false);

        for (c, prefix) in maximal.into_iter().zip(prefixes) {
            if prefix != min_prefix {
                continue;
            }
            placed.push(c);
            used[c] = true;
            code.extend_from_slice(&row);
            self.run(placed, used, code);
            code.truncate(row_start);
            used[c] = false;
            placed.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_code_is_lower_triangular() {
        let code = Poset::chain(3).canonical_code();
        let bits: Vec<u8> = code.bits().iter().map(|&b| b as u8).collect();
        assert_eq!(bits, vec![1, 0, 0, 1, 1, 0, 1, 1, 1]);
    }

    #[test]
    fn relabellings_share_a_code() {
        let a = Poset::new(4, &[(0, 1), (0, 2), (3, 2)]).unwrap();
        let b = Poset::new(4, &[(2, 3), (2, 0), (1, 0)]).unwrap();
        assert_eq!(a.canonical_code(), b.canonical_code());
        assert_ne!(a.canonical_code(), Poset::chain(4).canonical_code());
    }

    #[test]
    fn canonical_form_matches_code() {
        let a = Poset::new(4, &[(0, 1), (0, 2), (3, 2)]).unwrap();
        let f = a.canonical_form();
        assert_eq!(f.relation(), a.canonical_code().bits());
    }

    #[test]
    fn display_is_hex() {
        assert_eq!(Poset::singleton().canonical_code().to_string(), "8");
        assert_eq!(Poset::antichain(0).canonical_code().to_string(), "0");
    }
}
