use num_complex::Complex64;

/// Default relative clustering threshold: `τ = 1e-7·(1 + scale)`.
pub const CLUSTER_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cluster {
    pub center: Complex64,
    pub multiplicity: usize,
}

/// Eigenvalues grouped into numerically coincident clusters.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumClusters {
    pub clusters: Vec<Cluster>,
}

impl SpectrumClusters {
    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    /// Multiplicities in cluster order.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.clusters.iter().map(|c| c.multiplicity).collect()
    }
}

/// Single-linkage clustering with the default threshold `1e-7·(1 + scale)`.
pub fn cluster_spectrum(eigs: &[Complex64], scale: f64) -> SpectrumClusters {
    cluster_spectrum_with(eigs, CLUSTER_TOL * (1.0 + scale))
}

/// Single-linkage clustering at an absolute threshold.
///
/// Centers are multiplicity-weighted means. Clusters whose centers end up
/// within the threshold are merged, so centers are pairwise separated.
/// Clusters are listed in order of their first member.
pub fn cluster_spectrum_with(eigs: &[Complex64], threshold: f64) -> SpectrumClusters {
    let n = eigs.len();
    let mut label: Vec<usize> = (0..n).collect();
    fn find(label: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while label[r] != r {
            r = label[r];
        }
        label[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if (eigs[i] - eigs[j]).norm() <= threshold {
                let (a, b) = (find(&mut label, i), find(&mut label, j));
                if a != b {
                    label[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: Vec<(usize, Vec<Complex64>)> = Vec::new();
    for (i, &e) in eigs.iter().enumerate() {
        let root = find(&mut label, i);
        match groups.iter_mut().find(|(r, _)| *r == root) {
            Some((_, g)) => g.push(e),
            None => groups.push((root, vec![e])),
        }
    }
    let mut clusters: Vec<(Complex64, usize)> = groups
        .into_iter()
        .map(|(_, g)| (g.iter().sum::<Complex64>() / g.len() as f64, g.len()))
        .collect();

    loop {
        let mut merged = false;
        'outer: for i in 0..clusters.len() {
            for j in i + 1..clusters.len() {
                if (clusters[i].0 - clusters[j].0).norm() <= threshold {
                    let (ci, mi) = clusters[i];
                    let (cj, mj) = clusters.remove(j);
                    let m = mi + mj;
                    clusters[i] = ((ci * mi as f64 + cj * mj as f64) / m as f64, m);
                    merged = true;
                    break 'outer;
                }
            }
        }
        if !merged {
            break;
        }
    }
    SpectrumClusters {
        clusters: clusters
            .into_iter()
            .map(|(center, multiplicity)| Cluster {
                center,
                multiplicity,
            })
            .collect(),
    }
}
