#pragma once

#include <stdexcept>
#include <string>

namespace bldgzeta {

enum class errc {
  non_involutive_generator,
  braid_relation_violated,
  unsupported_coxeter_label,
  not_in_group,
  infinite_parabolic,
  singular_parabolic_sum,
  degenerate_cone,
  not_in_cone,
  not_in_lattice,
  not_bipartite_with_types,
  irregular_graph,
  malformed_document,
  invalid_position,
  division_by_zero_poly,
  not_expandable,
  malformed_ray,
  type_mismatch_at_attachment,
  truncation_too_shallow,
  singular_fit,
  usage_error,
  internal_error,
};

/// Stable machine-readable name, e.g. "NotInGroup".
const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& msg);

}  // namespace bldgzeta
