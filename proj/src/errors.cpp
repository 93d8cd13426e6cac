#include "vraag/errors.hpp"

namespace vraag {

const char* errc_name(errc code) {
  switch (code) {
    case errc::loop_edge: return "LoopEdge";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::duplicate_vertex: return "DuplicateVertex";
    case errc::unknown_vertex: return "UnknownVertex";
    case errc::bad_vertex_name: return "BadVertexName";
    case errc::lambda_not_in_complement: return "LambdaNotInComplement";
    case errc::mixed_components: return "MixedComponents";
    case errc::vertex_not_in_lambda: return "VertexNotInLambda";
    case errc::vertex_not_in_stated_component: return "VertexNotInStatedComponent";
    case errc::not_unique_path: return "NotUniquePath";
    case errc::ambient_mismatch: return "AmbientMismatch";
    case errc::word_too_long: return "WordTooLong";
    case errc::precondition_r1: return "PreconditionR1";
    case errc::not_triangle_free: return "NotTriangleFree";
    case errc::not_saturated: return "NotSaturated";
    case errc::assignment_trivial_image: return "AssignmentTrivialImage";
    case errc::bad_params: return "BadParams";
    case errc::parse_error: return "ParseError";
    case errc::usage_error: return "UsageError";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace vraag
