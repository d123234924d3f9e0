use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// The closed catalog of inequalities. `I-*` ids are operator-level and
/// need a normal matrix; `V-*` ids are vector-level reverse Schwarz
/// inequalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InequalityId {
    /// `‖T‖² − w(T²) ≤ 2r²/(1+|λ|)²`
    PriorNormGap,
    /// `(1+|λ|^{2ρ})‖T‖² ≤ 2|λ|^ρ w(T²) + ρ²‖T−λT*‖²`, `ρ ≥ 1`
    PriorPowerLarge,
    /// `(1+|λ|^{2ρ})‖T‖² ≤ 2|λ|^ρ w(T²) + |λ|^{2ρ−2}‖T−λT*‖²`, `ρ < 1`
    PriorPowerSmall,
    /// `‖T‖⁴ − w²(T²) ≤ r²‖T‖²/|λ|²`
    PriorQuarticGap,
    /// `(1+|λ|²)/(2|λ|)·‖T‖² ≤ w(T²) + r²/(2|λ|)`
    DefectBound,
    /// `‖T‖² − w(T²) ≤ r²/(2|λ|)`
    DefectGap,
    /// `‖T‖² − w(T²) ≤ r²/2` for `|λ| = 1`
    DefectGapUnimodular,
    /// `‖T‖² − w(T²) ≤ r²/(1+|λ|²)`
    DefectGapSharp,
    /// `‖T‖² − w(T²) ≤ 2r²/(1+|λ|)²`
    DefectGapCoarse,
    /// `‖T‖² − w(T²) ≤ r² − 2|λ|δ(T)μ(T)`
    SphereGap,
    /// `‖T‖² − w(T²) ≤ r²` (the `δ = 0` form)
    SphereGapFallback,
    /// `‖αT+βT*‖² ≤ (|α|²+|β|²)‖T‖² + 2|αβ|w(T²)`
    CombinationUpper,
    /// `(|α|²+|β|²)‖T‖² ≤ ‖αT−βT*‖² + 2|αβ|w(T²)`
    CombinationLower,
    /// `‖(A+A*)/2‖² ≤ ‖A‖²`
    RealPartConvexity,
    /// `‖(T+T*)/2‖² ≤ (‖T‖² + w(T²))/2`
    RealPartRefinement,
    /// `‖A‖⁴ − w²(A²) ≤ r²‖A‖²`
    GainQuarticGap,
    /// `(ξ²(A) − r²/|λ|²)^{1/2} ≤ w(A²)/‖A‖`
    GainRatio,
    /// `‖A‖⁴ − w²(A²) ≤ 2w(A)‖A‖[|λ|‖A‖ − (|λ|²ξ²(A) − r²)^{1/2}]`
    GainRadiusGap,
    /// `‖A‖² − w(A²) ≤ ¼|Γ−γ|²/|Γ+γ|·‖A‖²`
    DiskGap,
    /// `‖A‖² ≤ |Γ+γ|/(2√Re(Γγ̄))·w(A²)`
    DiskRatio,
    /// `‖A‖⁴ − w²(A²) ≤ [|Γ+γ| − 2√Re(Γγ̄)]·w(A²)‖A‖²`
    DiskQuarticGap,
    /// `‖A‖² − w(A²) ≤ ¼(M−m)²/(M+m)·‖A‖²`
    SegmentGap,
    /// `‖A‖² ≤ (M+m)/(2√(mM))·w(A²)`
    SegmentRatio,
    /// `‖A‖² − w(A²) ≤ (√M−√m)²/(2√(mM))·w(A²)`
    SegmentRelativeGap,
    /// `‖A‖⁴ − w²(A²) ≤ (√M−√m)²·w(A²)‖A‖²`, the disk quartic gap at
    /// `γ = m`, `Γ = M`.
    SegmentQuarticGap,
    /// `‖y‖²‖a‖² − (Re⟨y,a⟩)² ≤ r²‖y‖²` when `‖y−a‖ ≤ r ≤ ‖a‖`
    VecRealSchwarz,
    /// `‖y‖(‖a‖² − r²)^{1/2} ≤ Re⟨y,a⟩` when `‖y−a‖ ≤ r ≤ ‖a‖`
    VecRealLower,
    /// `‖y‖²‖a‖² − |⟨y,a⟩|² ≤ 2|⟨y,a⟩|‖a‖(‖a‖ − (‖a‖²−r²)^{1/2})`
    VecModulusSchwarz,
    /// `‖z‖‖y‖ − Re(conj(Γ+γ)⟨z,y⟩)/|Γ+γ| ≤ ¼|Γ−γ|²/|Γ+γ|·‖y‖²`
    VecDiskGap,
    /// `‖z‖‖y‖ ≤ |Γ+γ|/(2√Re(Γγ̄))·|⟨z,y⟩|`
    VecDiskRatio,
    /// `‖z‖²‖y‖² − |⟨z,y⟩|² ≤ [|Γ+γ| − 2√Re(Γγ̄)]·|⟨z,y⟩|‖y‖²`
    VecDiskQuartic,
}

use InequalityId::*;

impl InequalityId {
    /// Catalog order.
    pub const ALL: [InequalityId; 31] = [
        PriorNormGap,
        PriorPowerLarge,
        PriorPowerSmall,
        PriorQuarticGap,
        DefectBound,
        DefectGap,
        DefectGapUnimodular,
        DefectGapSharp,
        DefectGapCoarse,
        SphereGap,
        SphereGapFallback,
        CombinationUpper,
        CombinationLower,
        RealPartConvexity,
        RealPartRefinement,
        GainQuarticGap,
        GainRatio,
        GainRadiusGap,
        DiskGap,
        DiskRatio,
        DiskQuarticGap,
        SegmentGap,
        SegmentRatio,
        SegmentRelativeGap,
        SegmentQuarticGap,
        VecRealSchwarz,
        VecRealLower,
        VecModulusSchwarz,
        VecDiskGap,
        VecDiskRatio,
        VecDiskQuartic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PriorNormGap => "I-1.2",
            PriorPowerLarge => "I-1.3a",
            PriorPowerSmall => "I-1.3b",
            PriorQuarticGap => "I-1.4",
            DefectBound => "I-2.2",
            DefectGap => "I-2.6",
            DefectGapUnimodular => "I-2.7",
            DefectGapSharp => "I-2.8a",
            DefectGapCoarse => "I-2.8b",
            SphereGap => "I-2.9",
            SphereGapFallback => "I-2.9-fallback",
            CombinationUpper => "I-2.11",
            CombinationLower => "I-2.11a",
            RealPartConvexity => "I-2.13",
            RealPartRefinement => "I-2.14",
            GainQuarticGap => "I-2.15",
            GainRatio => "I-2.16",
            GainRadiusGap => "I-2.20",
            DiskGap => "I-3.1a",
            DiskRatio => "I-3.4",
            DiskQuarticGap => "I-3.7",
            SegmentGap => "I-3.14",
            SegmentRatio => "I-3.15",
            SegmentRelativeGap => "I-3.16",
            SegmentQuarticGap => "I-3.17",
            VecRealSchwarz => "V-2.16a",
            VecRealLower => "V-2.18src",
            VecModulusSchwarz => "V-2.20src",
            VecDiskGap => "V-3.2a",
            VecDiskRatio => "V-3.5",
            VecDiskQuartic => "V-3.8",
        }
    }

    pub fn is_vector(self) -> bool {
        self.as_str().starts_with('V')
    }

    /// Vector lemmas driven by `(λ, r)` rather than a disk.
    pub(crate) fn uses_radius(self) -> bool {
        matches!(self, VecRealSchwarz | VecRealLower | VecModulusSchwarz)
    }
}

impl fmt::Display for InequalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InequalityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        InequalityId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownInequality(s.to_string()))
    }
}
