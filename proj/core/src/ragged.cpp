#include "zariski/ragged.hpp"

namespace zariski {

std::string to_string(NormalFormKind kind) {
  switch (kind) {
    case NormalFormKind::Empty: return "Empty";
    case NormalFormKind::Full: return "Full";
    case NormalFormKind::Proper: return "Proper";
  }
  return "?";
}

std::string to_string(RewriteKind kind) {
  switch (kind) {
    case RewriteKind::Cancel: return "cancel";
    case RewriteKind::DeleteRow: return "delete_row";
    case RewriteKind::Adjust: return "adjust";
    case RewriteKind::Contradiction: return "contradiction";
  }
  return "?";
}

}  // namespace zariski
