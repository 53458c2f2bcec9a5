#ifndef QUIVERTILT_MUTATION_HPP
#define QUIVERTILT_MUTATION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quivertilt/quiver.hpp"

namespace quivertilt {

enum class MutationKind { Tilt, Cotilt };

std::string_view to_string(MutationKind k);

struct MutationStep {
  MutationKind kind = MutationKind::Tilt;
  std::string vertex;
  bool operator==(const MutationStep&) const = default;
};

using MutationTrace = std::vector<MutationStep>;

struct MutationCheck {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Same vertices, arrows reversed, relations (a, b) turned into (b, a).
BoundQuiver opposite_quiver(const BoundQuiver& q);

MutationCheck can_mutate(const BoundQuiver& q, const MutationStep& s);

// The mutated quiver, or nullopt when can_mutate would fail. One rewrite
// instead of two.
std::optional<BoundQuiver> try_mutate(const BoundQuiver& q, const MutationStep& s);

// Arrow ids are kept; only endpoints and relations change. Throws
// DomainError when can_mutate fails.
BoundQuiver mutate(const BoundQuiver& q, const MutationStep& s);

class TraceError : public DomainError {
 public:
  TraceError(std::size_t index, const std::string& reason)
      : DomainError("step " + std::to_string(index + 1) + ": " + reason), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// Left fold of mutate. When `intermediates` is given it receives the quiver
// after every step.
BoundQuiver apply_trace(const BoundQuiver& q, const MutationTrace& t,
                        std::vector<BoundQuiver>* intermediates = nullptr);

// One step per line: "tilt <vertex>" or "cotilt <vertex>"; '#' starts a comment.
MutationTrace parse_trace(std::string_view text);
std::string serialize_trace(const MutationTrace& t);

}  // namespace quivertilt

#endif  // QUIVERTILT_MUTATION_HPP
