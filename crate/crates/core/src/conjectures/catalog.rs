use serde::Serialize;

use super::ConjectureId;

/// Description of one registry entry.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub id: ConjectureId,
    /// Topic the statement belongs to.
    pub topic: &'static str,
    pub statement: &'static str,
    pub applies_to: &'static str,
    pub params: &'static [&'static str],
    pub input: &'static str,
    pub uses: &'static [&'static str],
    pub strict: bool,
}

fn entry(id: ConjectureId) -> CatalogEntry {
    use ConjectureId::*;
    let (topic, statement, applies_to, params, uses): (_, _, _, &[&str], &[&str]) = match id {
        C01HongExt => (
            "hong-wilf",
            "min(s+, s-) >= n - 1",
            "connected graphs",
            &[],
            &["spectra"],
        ),
        C01bHongExtComponents => (
            "hong-wilf",
            "min(s+, s-) >= n - c, c the number of components",
            "all graphs",
            &[],
            &["spectra"],
        ),
        C02WilfExt => (
            "hong-wilf",
            "sqrt(s+) <= (1 - 1/omega) n",
            "all graphs",
            &[],
            &["spectra", "invariants"],
        ),
        C03BollobasNikiforov => (
            "bollobas-nikiforov",
            "lambda_1^2 + lambda_2^2 <= 2 (1 - 1/omega) m",
            "graphs with n > omega",
            &[],
            &["spectra", "invariants"],
        ),
        C04Elw => (
            "bollobas-nikiforov",
            "sum_{i <= l} lambda_i^2 <= 2 (1 - 1/omega) m, l = min(n+, omega)",
            "all graphs",
            &["elw_ell_n_plus"],
            &["spectra", "invariants"],
        ),
        C05PlanarMax => (
            "planar-spectral-radius",
            "lambda <= lambda(K2 v P_{n-2})",
            "planar graphs with n >= 9",
            &[],
            &["spectra", "graph-core"],
        ),
        C07ZhaiLinShu => (
            "cycles-of-given-length",
            "lambda >= (k - 1 + sqrt(4m - k^2 + 1)) / 2 implies cycles of every length 3..2k+2, unless G = S_{m/k+(k+1)/2,k}",
            "graphs without isolated vertices",
            &["zls_k"],
            &["spectra", "graph-core"],
        ),
        C08HaemersToughness => (
            "toughness",
            "t(G) >= mu_{n-1} / (mu_1 - delta)",
            "connected non-complete graphs, n <= 24",
            &[],
            &["spectra", "invariants"],
        ),
        C14Saturation => (
            "saturation",
            "lambda >= lambda(S_{n,r-1}), equality only for S_{n,r-1}",
            "K_{r+1}-saturated graphs",
            &["saturation_r"],
            &["spectra", "invariants"],
        ),
        C15Brouwer => (
            "brouwer",
            "S_k <= e + C(k+1, 2) for every k",
            "all graphs",
            &[],
            &["spectra"],
        ),
        C16FullBrouwer => (
            "brouwer",
            "S_k <= e + C(k+1, 2), equality exactly for G_{k,r,s}",
            "all graphs",
            &[],
            &["spectra"],
        ),
        C17SpectralGapKite => (
            "spectral-gap",
            "lambda_1 - lambda_2 >= min over double kites DK(r, s), 2r + s = n",
            "connected graphs",
            &[],
            &["spectra"],
        ),
        C18SpectralGapComet => (
            "spectral-gap",
            "lambda_1 - lambda_2 >= min over double comets C(k, l), 2k + l = n, l >= 2",
            "trees with n >= 4",
            &[],
            &["spectra"],
        ),
        C19EnergyIndependence => (
            "energy",
            "sum of positive eigenvalues >= n - alpha",
            "all graphs",
            &[],
            &["spectra", "invariants"],
        ),
        C19bEnergyInertia => (
            "energy",
            "sum of positive eigenvalues >= max(n+, n-)",
            "all graphs",
            &[],
            &["spectra"],
        ),
        C20AkbariH => (
            "energy",
            "energy >= Delta + delta, equality only for complete graphs",
            "graphs with nonsingular adjacency matrix",
            &["force_applicability"],
            &["spectra"],
        ),
        C21Brandt => (
            "lambda1-plus-lambdan",
            "lambda_1 + lambda_n <= 4n / 25",
            "regular triangle-free graphs",
            &[],
            &["spectra"],
        ),
        C22Powers => (
            "other-eigenvalues",
            "lambda_i <= floor(n / i)",
            "graphs with n >= i",
            &["powers_i"],
            &["spectra"],
        ),
        C23Mohar => (
            "other-eigenvalues",
            "HL-index R(G) <= 1",
            "planar graphs with maximum degree at most 3",
            &[],
            &["spectra", "graph-core"],
        ),
        C24GregoryEigenvector => (
            "principal-eigenvector",
            "sum_{v in S} x_v^2 <= 1/2 - (k-2) / sqrt((k-2)^2 + 4(k-1)(n-k+1)), k = chi",
            "connected graphs, 2 <= n <= 18",
            &[],
            &["spectra", "invariants"],
        ),
        C25Cioaba => (
            "principal-eigenvector",
            "sum_{v in S} x_v^2 <= 1/2 for independent S",
            "connected graphs, 2 <= n <= 18",
            &[],
            &["spectra", "invariants"],
        ),
        C26GuiduliPtr => (
            "hereditary-density",
            "P_{t,r} implies lambda <= sqrt(tn) + sqrt(t(t+1) + 2r) + (t-1)/2",
            "graphs with property P_{t,r}, n <= 24",
            &["guiduli_t", "guiduli_r"],
            &["spectra"],
        ),
        C27BiluLinial => (
            "signed-graphs",
            "some signature has spectral radius <= 2 sqrt(d - 1)",
            "connected d-regular graphs, d >= 2",
            &[],
            &["signed"],
        ),
        C28GregorySigned => (
            "signed-graphs",
            "some signature has spectral radius < 2 sqrt(Delta - 1)",
            "graphs with maximum degree at least 3",
            &[],
            &["signed"],
        ),
    };
    CatalogEntry {
        id,
        topic,
        statement,
        applies_to,
        params,
        input: "graph",
        uses,
        strict: id.is_strict(),
    }
}

/// Every registered id, in registry order.
pub fn list() -> Vec<CatalogEntry> {
    ConjectureId::ALL.iter().map(|&id| entry(id)).collect()
}
