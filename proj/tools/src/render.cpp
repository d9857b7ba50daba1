#include <algorithm>
#include <sstream>

#include "evpoly_cli/jobs.hpp"

namespace evpoly::cli {
namespace {

bool is_leaf(const Json& j) { return !j.is_structured() || (j.is_object() && j.contains("text")); }

std::string inline_array(const Json& j);

std::string leaf_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_object()) {
    std::string text = j["text"].get<std::string>();
    if (text.empty()) text = "0";
    if (j.contains("word")) return inline_array(j["word"]) + " -> " + text;
    if (j.contains("root")) return "root " + inline_array(j["root"]) + " -> " + text;
    if (j.contains("residue")) return "residue " + j["residue"].dump() + " -> " + text;
    return text;
  }
  return j.dump();
}

std::string inline_array(const Json& j) {
  std::string s = "[";
  bool first = true;
  for (const auto& v : j) {
    s += first ? "" : ", ";
    s += v.is_array() ? inline_array(v) : leaf_text(v);
    first = false;
  }
  return s + "]";
}

bool flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& v : j)
    if (!(is_leaf(v) || flat(v))) return false;
  return true;
}

void emit(std::ostringstream& out, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      if (is_leaf(v)) {
        out << pad << key << ": " << leaf_text(v) << '\n';
      } else if (flat(v) && std::none_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); })) {
        out << pad << key << ": " << inline_array(v) << '\n';
      } else {
        out << pad << key << ":\n";
        emit(out, v, depth + 1);
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const auto& v : j) {
      if (is_leaf(v)) {
        out << pad << "- " << leaf_text(v) << '\n';
      } else if (flat(v)) {
        out << pad << "- " << inline_array(v) << '\n';
      } else {
        out << pad << "-\n";
        emit(out, v, depth + 1);
      }
    }
    return;
  }
  out << pad << leaf_text(j) << '\n';
}

}  // namespace

std::string render_canonical(const Json& doc) { return doc.dump() + "\n"; }

std::string render_pretty(const Json& doc) {
  std::ostringstream out;
  emit(out, doc, 0);
  return out.str();
}

}  // namespace evpoly::cli
