#pragma once

#include <stdexcept>
#include <string>

namespace vraag {

enum class errc {
  loop_edge,
  duplicate_edge,
  duplicate_vertex,
  unknown_vertex,
  bad_vertex_name,
  lambda_not_in_complement,
  mixed_components,
  vertex_not_in_lambda,
  vertex_not_in_stated_component,
  not_unique_path,
  ambient_mismatch,
  word_too_long,
  precondition_r1,
  not_triangle_free,
  not_saturated,
  assignment_trivial_image,
  bad_params,
  parse_error,
  usage_error,
  internal,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace vraag
