// Disjoint-set forest used for every cycle test in the crate.

#[derive(Debug, Clone)]
pub struct DisjointSets {
    parents: Vec<usize>,
    ranks: Vec<u8>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        Self {
            parents: (0..n).collect(),
            ranks: vec![0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parents.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parents[x] != x {
            self.parents[x] = self.parents[self.parents[x]]; // path halving
            x = self.parents[x];
        }
        x
    }

    /// Merges the sets of `x` and `y`. Returns `false` if they were already
    /// in one set, i.e. the edge `xy` closes a cycle.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (r, s) = (self.find(x), self.find(y));
        if r == s {
            return false;
        }
        match self.ranks[r].cmp(&self.ranks[s]) {
            std::cmp::Ordering::Greater => self.parents[s] = r,
            std::cmp::Ordering::Less => self.parents[r] = s,
            std::cmp::Ordering::Equal => {
                self.parents[r] = s;
                self.ranks[s] += 1;
            }
        }
        true
    }

    pub fn same_set(&mut self, x: usize, y: usize) -> bool {
        self.find(x) == self.find(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_reports_cycles() {
        let mut dsu = DisjointSets::new(5);
        assert!(dsu.union(0, 1));
        assert!(dsu.union(2, 3));
        assert!(dsu.union(1, 2));
        assert!(!dsu.union(0, 3));
        assert!(dsu.same_set(0, 3));
        assert!(!dsu.same_set(4, 0));
        assert_eq!(dsu.len(), 5);
    }
}
