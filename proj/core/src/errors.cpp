#include "bldgzeta/errors.hpp"

namespace bldgzeta {

const char* errc_name(errc c) {
  switch (c) {
    case errc::non_involutive_generator: return "NonInvolutiveGenerator";
    case errc::braid_relation_violated: return "BraidRelationViolated";
    case errc::unsupported_coxeter_label: return "UnsupportedCoxeterLabel";
    case errc::not_in_group: return "NotInGroup";
    case errc::infinite_parabolic: return "InfiniteParabolic";
    case errc::singular_parabolic_sum: return "SingularParabolicSum";
    case errc::degenerate_cone: return "DegenerateCone";
    case errc::not_in_cone: return "NotInCone";
    case errc::not_in_lattice: return "NotInLattice";
    case errc::not_bipartite_with_types: return "NotBipartiteWithTypes";
    case errc::irregular_graph: return "IrregularGraph";
    case errc::malformed_document: return "MalformedDocument";
    case errc::invalid_position: return "InvalidPosition";
    case errc::division_by_zero_poly: return "DivisionByZeroPoly";
    case errc::not_expandable: return "NotExpandable";
    case errc::malformed_ray: return "MalformedRay";
    case errc::type_mismatch_at_attachment: return "TypeMismatchAtAttachment";
    case errc::truncation_too_shallow: return "TruncationTooShallow";
    case errc::singular_fit: return "SingularFit";
    case errc::usage_error: return "UsageError";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

void fail(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace bldgzeta
