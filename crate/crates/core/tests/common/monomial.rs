//! Combinatorial homology of monomial algebras.
//!
//! For a path `p` ending at `t`, the kernel of `P(t) -> pΛ` is the direct sum
//! of `qΛ` over the minimal nonzero paths `q` from `t` with `pq = 0`. Syzygies
//! of simples therefore stay inside sums of path ideals and projective
//! dimensions come from a depth-first search over paths.

use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct Monomial {
    pub vertices: usize,
    /// `(source, target)`, 0-based.
    pub arrows: Vec<(usize, usize)>,
    pub relations: Vec<Vec<usize>>,
}

impl Monomial {
    /// Reads `vertices`, `arrow` and `relation` lines. `None` if some
    /// relation is not a single path.
    pub fn from_text(text: &str) -> Option<Monomial> {
        let mut vertices = 0;
        let mut names = Vec::new();
        let mut arrows = Vec::new();
        let mut rels = Vec::new();
        for line in text.lines().map(str::trim) {
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.first() {
                Some(&"vertices") => vertices = words[1].parse().ok()?,
                Some(&"arrow") => {
                    // arrow a : 1 -> 2
                    names.push(words[1].to_string());
                    arrows.push((words[3].parse::<usize>().ok()? - 1, words[5].parse::<usize>().ok()? - 1));
                }
                Some(&"relation") => {
                    let body = words[1..].join(" ");
                    if body.contains('+') || body.contains(' ') {
                        return None;
                    }
                    rels.push(body);
                }
                _ => {}
            }
        }
        let relations = rels
            .iter()
            .map(|r| r.split('.').map(|a| names.iter().position(|n| n == a)).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(Monomial { vertices, arrows, relations })
    }

    fn is_zero(&self, p: &[usize]) -> bool {
        self.relations.iter().any(|r| p.windows(r.len()).any(|w| w == r.as_slice()))
    }

    fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].0 == v)
    }

    /// Nonzero paths of positive length starting at `v`.
    fn paths_from(&self, v: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = self.arrows_from(v).map(|a| vec![a]).collect();
        while let Some(p) = stack.pop() {
            if self.is_zero(&p) {
                continue;
            }
            assert!(p.len() < 200, "relations are not admissible");
            let end = self.arrows[*p.last().unwrap()].1;
            for a in self.arrows_from(end) {
                let mut q = p.clone();
                q.push(a);
                stack.push(q);
            }
            out.push(p);
        }
        out
    }

    pub fn dimension(&self) -> usize {
        (0..self.vertices).map(|v| 1 + self.paths_from(v).len()).sum()
    }

    pub fn loewy_length(&self) -> usize {
        (0..self.vertices).flat_map(|v| self.paths_from(v)).map(|p| p.len()).max().unwrap_or(0) + 1
    }

    /// Minimal nonzero `q` with `pq = 0`.
    fn annihilators(&self, p: &[usize]) -> Vec<Vec<usize>> {
        let end = self.arrows[*p.last().unwrap()].1;
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut cands = self.paths_from(end);
        cands.sort_by_key(|q| q.len());
        for q in cands {
            let pq: Vec<usize> = p.iter().chain(&q).copied().collect();
            if self.is_zero(&pq) && !out.iter().any(|m| q.starts_with(m)) {
                out.push(q);
            }
        }
        out
    }

    /// `None` for infinite.
    fn pd_path(&self, p: &[usize], memo: &mut HashMap<Vec<usize>, Option<usize>>, stack: &mut Vec<Vec<usize>>) -> Option<usize> {
        if let Some(r) = memo.get(p) {
            return *r;
        }
        if stack.iter().any(|s| s == p) {
            return None;
        }
        stack.push(p.to_vec());
        let mut best = Some(0);
        let ann = self.annihilators(p);
        for q in &ann {
            best = match (best, self.pd_path(q, memo, stack)) {
                (Some(b), Some(d)) => Some(b.max(d + 1)),
                _ => None,
            };
        }
        stack.pop();
        memo.insert(p.to_vec(), best);
        best
    }

    pub fn pd_simples(&self) -> Vec<Option<usize>> {
        let mut memo = HashMap::new();
        (0..self.vertices)
            .map(|v| {
                let mut best = Some(0);
                for a in self.arrows_from(v) {
                    if self.is_zero(&[a]) {
                        continue;
                    }
                    best = match (best, self.pd_path(&[a], &mut memo, &mut Vec::new())) {
                        (Some(b), Some(d)) => Some(b.max(d + 1)),
                        _ => None,
                    };
                }
                best
            })
            .collect()
    }

    pub fn global_dimension(&self) -> Option<usize> {
        self.pd_simples().into_iter().try_fold(0, |acc, p| p.map(|p| acc.max(p)))
    }
}
