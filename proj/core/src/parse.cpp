#include "spinchain/parse.hpp"

#include <charconv>
#include <string>

#include "spinchain/errors.hpp"

namespace spinchain {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  s = trim(s);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(',', start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_real(std::string_view s, std::string_view whole) {
  double v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("malformed number '" + std::string(whole) + "'");
  return v;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (auto tok : split(text)) {
    int v = 0;
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw InputError("malformed integer list '" + std::string(text) + "'");
    out.push_back(v);
  }
  return out;
}

cplx parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw InputError("empty complex number");
  if (s.back() != 'i') return {parse_real(s, text), 0.0};
  s.remove_suffix(1);
  // split at the last sign that is not an exponent sign and not leading
  std::size_t cut = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  std::string_view re = cut == std::string_view::npos ? std::string_view{} : s.substr(0, cut);
  std::string_view im = cut == std::string_view::npos ? s : s.substr(cut);
  double imv;
  if (im.empty() || im == "+") imv = 1.0;
  else if (im == "-") imv = -1.0;
  else {
    if (im.front() == '+') im.remove_prefix(1);
    imv = parse_real(im, text);
  }
  double rev = re.empty() ? 0.0 : parse_real(re, text);
  return {rev, imv};
}

std::vector<cplx> parse_complex_list(std::string_view text) {
  std::vector<cplx> out;
  for (auto tok : split(text)) out.push_back(parse_complex(tok));
  return out;
}

}  // namespace spinchain
