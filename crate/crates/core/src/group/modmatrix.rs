use crate::error::{Error, Result};

/// Square matrix over `Z/nZ`, row-major, entries reduced into `0..modulus`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModMatrix {
    modulus: u32,
    dim: usize,
    entries: Vec<u32>,
}

impl ModMatrix {
    pub fn identity(modulus: u32, dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1 % modulus;
        }
        ModMatrix {
            modulus,
            dim,
            entries,
        }
    }

    /// Builds a matrix from signed row-major entries, reducing each modulo `modulus`.
    pub fn from_signed(modulus: u32, dim: usize, entries: &[i64]) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::GroupDefinition(format!("modulus {modulus} < 2")));
        }
        if entries.len() != dim * dim {
            return Err(Error::GroupDefinition(format!(
                "expected {} entries for a {dim}x{dim} matrix, got {}",
                dim * dim,
                entries.len()
            )));
        }
        let m = modulus as i64;
        Ok(ModMatrix {
            modulus,
            dim,
            entries: entries.iter().map(|&e| e.rem_euclid(m) as u32).collect(),
        })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.entries[row * self.dim + col]
    }

    pub fn compose(&self, other: &ModMatrix) -> ModMatrix {
        let n = self.dim;
        let m = self.modulus as u64;
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u64;
                for k in 0..n {
                    acc = (acc + self.get(i, k) as u64 * other.get(k, j) as u64) % m;
                }
                entries[i * n + j] = acc as u32;
            }
        }
        ModMatrix {
            modulus: self.modulus,
            dim: n,
            entries,
        }
    }

    /// Determinant reduced mod n, by cofactor expansion (dimensions here are tiny).
    pub fn det(&self) -> u32 {
        let m = self.modulus as i64;
        let rows: Vec<Vec<i64>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) as i64).collect())
            .collect();
        det_mod(&rows, m) as u32
    }

    pub fn is_invertible(&self) -> bool {
        num_integer::Integer::gcd(&self.det(), &self.modulus) == 1
    }

    pub(crate) fn write_key(&self, out: &mut Vec<u8>) {
        out.extend_from_slice(&self.modulus.to_be_bytes());
        out.extend_from_slice(&(self.dim as u16).to_be_bytes());
        for &e in &self.entries {
            out.extend_from_slice(&e.to_be_bytes());
        }
    }
}

fn det_mod(rows: &[Vec<i64>], m: i64) -> i64 {
    let n = rows.len();
    match n {
        0 => 1 % m,
        1 => rows[0][0].rem_euclid(m),
        _ => {
            let mut acc = 0i64;
            for col in 0..n {
                let minor: Vec<Vec<i64>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != col)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let term = rows[0][col] * det_mod(&minor, m) % m;
                acc = if col % 2 == 0 { acc + term } else { acc - term }.rem_euclid(m);
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_multiplies() {
        let u = ModMatrix::from_signed(5, 2, &[-1, 1, -1, 0]).unwrap();
        assert_eq!(u.get(0, 0), 4);
        let u3 = u.compose(&u).compose(&u);
        assert_eq!(u3, ModMatrix::identity(5, 2));
        assert_eq!(u.det(), 1);
        assert!(u.is_invertible());
    }

    #[test]
    fn singular_mod_n() {
        let a = ModMatrix::from_signed(6, 2, &[2, 0, 0, 1]).unwrap();
        assert!(!a.is_invertible());
        assert!(ModMatrix::from_signed(1, 1, &[0]).is_err());
        assert!(ModMatrix::from_signed(5, 2, &[1, 2, 3]).is_err());
    }
}
