//! Shared workloads for the benchmarks.

use zmult_core::corpus::{bundled, CorpusEntry};
use zmult_core::Poly;

/// Corpus germs by name, parsed.
pub fn corpus_germs(names: &[&str]) -> Vec<(String, Poly)> {
    let all = bundled();
    names
        .iter()
        .map(|n| {
            let e: &CorpusEntry = all.iter().find(|e| e.name == *n).unwrap_or_else(|| panic!("no corpus entry {n}"));
            (e.name.clone(), e.germ().expect("corpus parses"))
        })
        .collect()
}

/// `f` after the unipotent change `x_i -> x_i + x_(i+1)`, which destroys
/// any monomial structure of the Jacobian ideal.
pub fn rotated(f: &Poly) -> Poly {
    let n = f.nvars();
    let images: Vec<Poly> =
        (0..n).map(|i| if i + 1 < n { &Poly::var(n, i) + &Poly::var(n, i + 1) } else { Poly::var(n, i) }).collect();
    f.substitute(&images).expect("same variable count")
}

#[cfg(test)]
mod tests {
    use super::*;
    use zmult_core::milnor::milnor_number;

    #[test]
    fn rotation_keeps_mu() {
        for (_, f) in corpus_germs(&["E6", "T245", "D5-3"]) {
            assert_eq!(milnor_number(&rotated(&f)).unwrap().mu, milnor_number(&f).unwrap().mu);
        }
    }
}
