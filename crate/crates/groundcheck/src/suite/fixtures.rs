//! Fixture knowledge bases and alignments for the built-in suite.
//!
//! Three operand domains come in graded variants: regions (`GEO*`,
//! mereological), processing purposes (`DPV*`, taxonomic) and languages
//! (`LNG*`, taxonomic). The `000` member is the richest; `001` is a smaller
//! vocabulary for the same domain used as the far side of alignments; later
//! members vary one axiom dimension (negative order facts, unique names).
//! `NOM000` is a nominal protocol enumeration, and the remaining KBs are
//! minimal shapes that isolate structural behaviors: a five-deep chain, a
//! diamond, a singleton and a near-miss lattice.

use std::collections::BTreeMap;

use crate::alignment::Alignment;
use crate::kb::{ConceptId, Domain, KbSpec, KnowledgeBase};

fn ids(names: &[&str]) -> Vec<ConceptId> {
    names.iter().map(|n| ConceptId::new(*n)).collect()
}

fn rel(entries: &[(&str, &str)]) -> Vec<(ConceptId, ConceptId)> {
    entries
        .iter()
        .map(|(a, b)| (ConceptId::new(*a), ConceptId::new(*b)))
        .collect()
}

fn gamma(entries: &[(&str, &str)]) -> BTreeMap<String, ConceptId> {
    entries
        .iter()
        .map(|(v, c)| ((*v).to_owned(), ConceptId::new(*c)))
        .collect()
}

fn build(spec: KbSpec) -> KnowledgeBase {
    let id = spec.id.clone();
    KnowledgeBase::from_spec(&spec)
        .unwrap_or_else(|e| panic!("builtin fixture {id} must validate: {e}"))
}

/// European regions with Bavaria inside Germany inside Europe, France inside
/// Europe, and Germany/France disjoint. Values include both short codes and
/// GeoNames identifiers.
pub(crate) fn geo000() -> KnowledgeBase {
    let mut s = KbSpec::new("GEO000", Domain::Mereological);
    s.concepts = ids(&["europe", "germany", "france", "bavaria"]);
    s.leq = rel(&[
        ("bavaria", "germany"),
        ("germany", "europe"),
        ("france", "europe"),
    ]);
    s.disjoint = rel(&[("germany", "france")]);
    s.gamma = gamma(&[
        ("eu", "europe"),
        ("de", "germany"),
        ("fr", "france"),
        ("by", "bavaria"),
        ("https://sws.geonames.org/6255148/", "europe"),
        ("https://sws.geonames.org/2921044/", "germany"),
        ("https://sws.geonames.org/3017382/", "france"),
        ("https://sws.geonames.org/2951839/", "bavaria"),
    ]);
    build(s)
}

/// Coarser region vocabulary (ISO-style territory codes) used as the far
/// side of the region alignment.
pub(crate) fn geo001() -> KnowledgeBase {
    let mut s = KbSpec::new("GEO001", Domain::Mereological);
    s.concepts = ids(&["euRegion", "deTerritory", "frTerritory"]);
    s.leq = rel(&[("deTerritory", "euRegion"), ("frTerritory", "euRegion")]);
    s.disjoint = rel(&[("deTerritory", "frTerritory")]);
    s.gamma = gamma(&[
        ("EU", "euRegion"),
        ("DE", "deTerritory"),
        ("FR", "frTerritory"),
    ]);
    build(s)
}

/// GEO000 plus negative order facts: Europe is not part of Germany and
/// Germany is not part of Bavaria, turning the open questions of GEO000
/// into refutations.
pub(crate) fn geo002() -> KnowledgeBase {
    let mut s = geo000().to_spec();
    s.id = "GEO002".to_owned();
    s.not_leq = rel(&[("europe", "germany"), ("germany", "bavaria")]);
    build(s)
}

/// Processing purposes: research and commercial branches with a shared
/// commercial-research child, non-commercial research disjoint from the
/// commercial branch, and marketing/education leaves.
pub(crate) fn dpv000() -> KnowledgeBase {
    let mut s = KbSpec::new("DPV000", Domain::Taxonomic);
    s.concepts = ids(&[
        "purpose",
        "research",
        "commercial",
        "nonCommercial",
        "scientificResearch",
        "commercialResearch",
        "nonCommercialResearch",
        "marketing",
        "serviceProvision",
        "education",
    ]);
    s.leq = rel(&[
        ("research", "purpose"),
        ("commercial", "purpose"),
        ("nonCommercial", "purpose"),
        ("scientificResearch", "research"),
        ("commercialResearch", "research"),
        ("commercialResearch", "commercial"),
        ("nonCommercialResearch", "research"),
        ("nonCommercialResearch", "nonCommercial"),
        ("marketing", "commercial"),
        ("serviceProvision", "commercial"),
        ("education", "nonCommercial"),
    ]);
    s.disjoint = rel(&[
        ("nonCommercialResearch", "commercial"),
        ("marketing", "education"),
    ]);
    s.gamma = gamma(&[
        ("purpose", "purpose"),
        ("research", "research"),
        ("commercial", "commercial"),
        ("nonCommercial", "nonCommercial"),
        ("scientificResearch", "scientificResearch"),
        ("commercialResearch", "commercialResearch"),
        ("nonCommercialResearch", "nonCommercialResearch"),
        ("marketing", "marketing"),
        ("serviceProvision", "serviceProvision"),
        ("education", "education"),
        ("https://w3id.org/dpv#Purpose", "purpose"),
        ("https://w3id.org/dpv#Research", "research"),
        ("https://w3id.org/dpv#Commercial", "commercial"),
        ("https://w3id.org/dpv#NonCommercial", "nonCommercial"),
        ("https://w3id.org/dpv#ScientificResearch", "scientificResearch"),
        ("https://w3id.org/dpv#CommercialResearch", "commercialResearch"),
        ("https://w3id.org/dpv#NonCommercialResearch", "nonCommercialResearch"),
        ("https://w3id.org/dpv#Marketing", "marketing"),
        ("https://w3id.org/dpv#ServiceProvision", "serviceProvision"),
        ("https://w3id.org/dpv#Education", "education"),
    ]);
    build(s)
}

/// Smaller purpose vocabulary (GDPR-flavored URNs) used as the far side of
/// the purpose alignment.
pub(crate) fn dpv001() -> KnowledgeBase {
    let mut s = KbSpec::new("DPV001", Domain::Taxonomic);
    s.concepts = ids(&[
        "purpose",
        "research",
        "commercial",
        "commercialResearch",
        "nonCommercialResearch",
        "marketing",
    ]);
    s.leq = rel(&[
        ("research", "purpose"),
        ("commercial", "purpose"),
        ("commercialResearch", "research"),
        ("commercialResearch", "commercial"),
        ("nonCommercialResearch", "research"),
        ("marketing", "commercial"),
    ]);
    s.disjoint = rel(&[("nonCommercialResearch", "commercial")]);
    s.gamma = gamma(&[
        ("urn:gdpr:purpose", "purpose"),
        ("urn:gdpr:research", "research"),
        ("urn:gdpr:commercial", "commercial"),
        ("urn:gdpr:commercial-research", "commercialResearch"),
        ("urn:gdpr:non-commercial-research", "nonCommercialResearch"),
        ("urn:gdpr:marketing", "marketing"),
    ]);
    build(s)
}

/// DPV000 without the unique-names assumption: distinct concept names may
/// co-refer unless disjointness separates them.
pub(crate) fn dpv002() -> KnowledgeBase {
    let mut s = dpv000().to_spec();
    s.id = "DPV002".to_owned();
    s.una = false;
    build(s)
}

/// DPV001 plus cross-level negative order facts.
pub(crate) fn dpv003() -> KnowledgeBase {
    let mut s = dpv001().to_spec();
    s.id = "DPV003".to_owned();
    s.not_leq = rel(&[
        ("research", "commercial"),
        ("commercial", "research"),
        ("marketing", "research"),
    ]);
    build(s)
}

/// Languages under BCP 47 subtags: Germanic and Romance families (disjoint),
/// German/English additionally disjoint within the Germanic family, Dutch
/// deliberately left unplaced relative to its siblings.
pub(crate) fn lng000() -> KnowledgeBase {
    let mut s = KbSpec::new("LNG000", Domain::Taxonomic);
    s.concepts = ids(&[
        "language", "germanic", "romance", "de", "en", "nl", "fr", "es", "it", "pt",
    ]);
    s.leq = rel(&[
        ("germanic", "language"),
        ("romance", "language"),
        ("de", "germanic"),
        ("en", "germanic"),
        ("nl", "germanic"),
        ("fr", "romance"),
        ("es", "romance"),
        ("it", "romance"),
        ("pt", "romance"),
    ]);
    s.disjoint = rel(&[("germanic", "romance"), ("de", "en")]);
    s.gamma = gamma(&[
        ("de", "de"),
        ("en", "en"),
        ("nl", "nl"),
        ("fr", "fr"),
        ("es", "es"),
        ("it", "it"),
        ("pt", "pt"),
        ("gem", "germanic"),
        ("roa", "romance"),
        ("mul", "language"),
    ]);
    build(s)
}

/// Smaller language vocabulary (ISO 639-3 codes) used as the far side of
/// the language alignment.
pub(crate) fn lng001() -> KnowledgeBase {
    let mut s = KbSpec::new("LNG001", Domain::Taxonomic);
    s.concepts = ids(&["language", "germanic", "romance", "deu", "eng", "fra"]);
    s.leq = rel(&[
        ("germanic", "language"),
        ("romance", "language"),
        ("deu", "germanic"),
        ("eng", "germanic"),
        ("fra", "romance"),
    ]);
    s.disjoint = rel(&[("germanic", "romance"), ("deu", "eng")]);
    s.gamma = gamma(&[
        ("deu", "deu"),
        ("eng", "eng"),
        ("fra", "fra"),
        ("gem", "germanic"),
        ("roa", "romance"),
        ("und", "language"),
    ]);
    build(s)
}

/// LNG000 without the unique-names assumption.
pub(crate) fn lng002() -> KnowledgeBase {
    let mut s = lng000().to_spec();
    s.id = "LNG002".to_owned();
    s.una = false;
    build(s)
}

/// Delivery channels as a nominal enumeration: the order is identity and
/// every pair of distinct protocols is disjoint.
pub(crate) fn nom000() -> KnowledgeBase {
    let mut s = KbSpec::new("NOM000", Domain::Nominal);
    s.concepts = ids(&["sftp", "https", "ftp", "email"]);
    s.gamma = gamma(&[
        ("sftp", "sftp"),
        ("https", "https"),
        ("ftp", "ftp"),
        ("mailto", "email"),
    ]);
    build(s)
}

/// A five-deep containment chain n0 ≤ n1 ≤ n2 ≤ n3 ≤ n4.
pub(crate) fn chn000() -> KnowledgeBase {
    let mut s = KbSpec::new("CHN000", Domain::Taxonomic);
    s.concepts = ids(&["n0", "n1", "n2", "n3", "n4"]);
    s.leq = rel(&[("n0", "n1"), ("n1", "n2"), ("n2", "n3"), ("n3", "n4")]);
    s.gamma = gamma(&[
        ("v0", "n0"),
        ("v1", "n1"),
        ("v2", "n2"),
        ("v3", "n3"),
        ("v4", "n4"),
    ]);
    build(s)
}

/// A diamond: join below both left and right, both below root.
pub(crate) fn dia000() -> KnowledgeBase {
    let mut s = KbSpec::new("DIA000", Domain::Taxonomic);
    s.concepts = ids(&["root", "left", "right", "join"]);
    s.leq = rel(&[
        ("left", "root"),
        ("right", "root"),
        ("join", "left"),
        ("join", "right"),
    ]);
    s.gamma = gamma(&[
        ("vroot", "root"),
        ("vleft", "left"),
        ("vright", "right"),
        ("vjoin", "join"),
    ]);
    build(s)
}

/// A single-concept KB: complements collapse to the empty set.
pub(crate) fn sng000() -> KnowledgeBase {
    let mut s = KbSpec::new("SNG000", Domain::Taxonomic);
    s.concepts = ids(&["only"]);
    s.gamma = gamma(&[("urn:only", "only")]);
    build(s)
}

/// Near-miss lattice: left and right branches overlap exactly in `shared`;
/// `leftOnly`/`rightOnly` sit under a single branch and no disjointness is
/// asserted anywhere.
pub(crate) fn nms000() -> KnowledgeBase {
    let mut s = KbSpec::new("NMS000", Domain::Taxonomic);
    s.concepts = ids(&["top", "left", "right", "leftOnly", "rightOnly", "shared"]);
    s.leq = rel(&[
        ("left", "top"),
        ("right", "top"),
        ("leftOnly", "left"),
        ("rightOnly", "right"),
        ("shared", "left"),
        ("shared", "right"),
    ]);
    s.gamma = gamma(&[
        ("top", "top"),
        ("left", "left"),
        ("right", "right"),
        ("left-only", "leftOnly"),
        ("right-only", "rightOnly"),
        ("shared", "shared"),
    ]);
    build(s)
}

/// All fixture KBs keyed by id.
pub(crate) fn builtin_kbs() -> BTreeMap<String, KnowledgeBase> {
    [
        geo000(),
        geo001(),
        geo002(),
        dpv000(),
        dpv001(),
        dpv002(),
        dpv003(),
        lng000(),
        lng001(),
        lng002(),
        nom000(),
        chn000(),
        dia000(),
        sng000(),
        nms000(),
    ]
    .into_iter()
    .map(|kb| (kb.id().to_owned(), kb))
    .collect()
}

/// Total region alignment GEO001 → GEO000.
pub(crate) fn aln_geo() -> Alignment {
    Alignment::new(
        "GEO001",
        "GEO000",
        rel(&[
            ("euRegion", "europe"),
            ("deTerritory", "germany"),
            ("frTerritory", "france"),
        ]),
    )
}

/// Total purpose alignment DPV001 → DPV000 (shared concept names).
pub(crate) fn aln_dpv() -> Alignment {
    Alignment::new(
        "DPV001",
        "DPV000",
        rel(&[
            ("purpose", "purpose"),
            ("research", "research"),
            ("commercial", "commercial"),
            ("commercialResearch", "commercialResearch"),
            ("nonCommercialResearch", "nonCommercialResearch"),
            ("marketing", "marketing"),
        ]),
    )
}

/// Total language alignment LNG001 → LNG000.
pub(crate) fn aln_lng() -> Alignment {
    Alignment::new(
        "LNG001",
        "LNG000",
        rel(&[
            ("language", "language"),
            ("germanic", "germanic"),
            ("romance", "romance"),
            ("deu", "de"),
            ("eng", "en"),
            ("fra", "fr"),
        ]),
    )
}

/// Partial region alignment GEO000 → GEO001 covering only France and
/// Bavaria (Bavarian territory reported under the German ISO code);
/// constraints naming Germany or Europe degrade.
pub(crate) fn aln_geo_partial() -> Alignment {
    Alignment::new(
        "GEO000",
        "GEO001",
        rel(&[("france", "frTerritory"), ("bavaria", "deTerritory")]),
    )
}

/// Partial purpose alignment DPV000 → DPV001 covering only the three leaf
/// purposes; branch concepts degrade.
pub(crate) fn aln_dpv_partial() -> Alignment {
    Alignment::new(
        "DPV000",
        "DPV001",
        rel(&[
            ("commercialResearch", "commercialResearch"),
            ("nonCommercialResearch", "nonCommercialResearch"),
            ("marketing", "marketing"),
        ]),
    )
}

/// Partial language alignment LNG000 → LNG001 covering only the three codes
/// shared by both vocabularies; family concepts degrade.
pub(crate) fn aln_lng_partial() -> Alignment {
    Alignment::new(
        "LNG000",
        "LNG001",
        rel(&[("de", "deu"), ("en", "eng"), ("fr", "fra")]),
    )
}

/// Invalid region alignment GEO000 → GEO001: mapping Germany without
/// Bavaria loses a denotation witness, so validation must reject it.
pub(crate) fn aln_geo_bad() -> Alignment {
    Alignment::new(
        "GEO000",
        "GEO001",
        rel(&[("germany", "deTerritory"), ("france", "frTerritory")]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alignment::{validate_alignment, AlignmentViolation};

    #[test]
    fn all_fixture_kbs_validate() {
        let kbs = builtin_kbs();
        assert_eq!(kbs.len(), 15);
        for (id, kb) in &kbs {
            assert_eq!(id, kb.id());
            assert!(!kb.is_empty(), "{id} has concepts");
        }
    }

    #[test]
    fn graded_variants_differ_only_in_the_varied_axis() {
        let geo000 = geo000().to_spec();
        let geo002 = geo002().to_spec();
        assert_eq!(geo000.leq, geo002.leq);
        assert!(geo002.not_leq.len() >= 2 && geo000.not_leq.is_empty());

        let dpv000 = dpv000().to_spec();
        let dpv002 = dpv002().to_spec();
        assert!(dpv000.una && !dpv002.una);
        assert_eq!(dpv000.concepts, dpv002.concepts);

        assert!(!lng002().una() && lng000().una());
    }

    #[test]
    fn total_alignments_validate_cleanly() {
        let kbs = builtin_kbs();
        for (aln, src, tgt) in [
            (aln_geo(), "GEO001", "GEO000"),
            (aln_dpv(), "DPV001", "DPV000"),
            (aln_lng(), "LNG001", "LNG000"),
        ] {
            let violations = validate_alignment(&kbs[src], &kbs[tgt], &aln);
            assert!(violations.is_empty(), "{src}->{tgt}: {violations:?}");
            assert_eq!(aln.map.len(), kbs[src].len(), "{src} map is total");
        }
    }

    #[test]
    fn partial_alignments_validate_cleanly() {
        let kbs = builtin_kbs();
        for (aln, src, tgt) in [
            (aln_geo_partial(), "GEO000", "GEO001"),
            (aln_dpv_partial(), "DPV000", "DPV001"),
            (aln_lng_partial(), "LNG000", "LNG001"),
        ] {
            let violations = validate_alignment(&kbs[src], &kbs[tgt], &aln);
            assert!(violations.is_empty(), "{src}->{tgt}: {violations:?}");
            assert!(aln.map.len() < kbs[src].len(), "{src} map is partial");
        }
    }

    #[test]
    fn witness_incomplete_alignment_is_rejected() {
        let kbs = builtin_kbs();
        let violations = validate_alignment(&kbs["GEO000"], &kbs["GEO001"], &aln_geo_bad());
        assert_eq!(
            violations,
            vec![AlignmentViolation::WitnessIncomplete {
                grounded: ConceptId::new("germany"),
                missing: ConceptId::new("bavaria"),
            }]
        );
    }
}
