use crate::GroupError;

/// A finite group as a multiplication table. The unit, inverses and
/// associativity are checked on construction, so a value of this type is
/// always an actual group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteGroupTable {
    names: Vec<String>,
    mul: Vec<Vec<usize>>,
    unit: usize,
    inv: Vec<usize>,
}

impl FiniteGroupTable {
    pub fn new(names: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = names.len();
        if n == 0 {
            return Err(GroupError::Invalid("empty element set".into()));
        }
        if mul.len() != n || mul.iter().any(|row| row.len() != n) {
            return Err(GroupError::Invalid(format!(
                "multiplication table is not {n}x{n}"
            )));
        }
        if mul.iter().flatten().any(|&e| e >= n) {
            return Err(GroupError::Invalid("table entry out of range".into()));
        }
        let unit = (0..n)
            .find(|&e| (0..n).all(|x| mul[e][x] == x && mul[x][e] == x))
            .ok_or_else(|| GroupError::Invalid("no unit element".into()))?;
        let mut inv = vec![usize::MAX; n];
        for x in 0..n {
            inv[x] = (0..n)
                .find(|&y| mul[x][y] == unit && mul[y][x] == unit)
                .ok_or_else(|| GroupError::Invalid(format!("no inverse for \"{}\"", names[x])))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(GroupError::Invalid(format!(
                            "associativity fails at (\"{}\", \"{}\", \"{}\")",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroupTable {
            names,
            mul,
            unit,
            inv,
        })
    }

    pub fn trivial() -> Self {
        FiniteGroupTable::new(vec!["1".into()], vec![vec![0]]).unwrap()
    }

    /// Z/m with elements `1, g, g2, ..., g{m-1}`.
    pub fn cyclic(m: usize) -> Self {
        assert!(m >= 1);
        let names = (0..m)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g{k}"),
            })
            .collect();
        let mul = (0..m).map(|a| (0..m).map(|b| (a + b) % m).collect()).collect();
        FiniteGroupTable::new(names, mul).unwrap()
    }

    /// Symmetric group on `n` letters; elements are named by their image
    /// tuple, e.g. "s102" for the transposition swapping 0 and 1 in S_3.
    pub fn symmetric(n: usize) -> Self {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            let mut items: Vec<usize> = (0..n).collect();
            permute(&mut items, 0, &mut out);
            out.sort();
            out
        }
        fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
            if k == items.len() {
                out.push(items.clone());
                return;
            }
            for i in k..items.len() {
                items.swap(k, i);
                permute(items, k + 1, out);
                items.swap(k, i);
            }
        }
        let ps = perms(n);
        let index: std::collections::HashMap<&Vec<usize>, usize> =
            ps.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let names = ps
            .iter()
            .map(|p| {
                let digits: String = p.iter().map(|d| d.to_string()).collect();
                format!("s{digits}")
            })
            .collect();
        // (a*b)(x) = a(b(x))
        let mul = ps
            .iter()
            .map(|a| {
                ps.iter()
                    .map(|b| {
                        let composed: Vec<usize> = (0..n).map(|x| a[b[x]]).collect();
                        index[&composed]
                    })
                    .collect()
            })
            .collect();
        FiniteGroupTable::new(names, mul).unwrap()
    }

    pub fn direct_product(a: &FiniteGroupTable, b: &FiniteGroupTable) -> Self {
        let na = a.order();
        let nb = b.order();
        let names = (0..na * nb)
            .map(|e| format!("({},{})", a.names[e / nb], b.names[e % nb]))
            .collect();
        let mul = (0..na * nb)
            .map(|x| {
                (0..na * nb)
                    .map(|y| {
                        let (xa, xb) = (x / nb, x % nb);
                        let (ya, yb) = (y / nb, y % nb);
                        a.mul[xa][ya] * nb + b.mul[xb][yb]
                    })
                    .collect()
            })
            .collect();
        FiniteGroupTable::new(names, mul).unwrap()
    }

    pub fn klein_four() -> Self {
        Self::direct_product(&Self::cyclic(2), &Self::cyclic(2))
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    /// Elements commuting with everything, in table order.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&z| (0..self.order()).all(|x| self.mul[z][x] == self.mul[x][z]))
            .collect()
    }
}
