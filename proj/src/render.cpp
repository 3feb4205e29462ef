#include "hankel/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hankel {

std::string render_ascii(const PathSystemConfig& config, std::span<const LatticePath> family) {
  std::map<LatticePoint, char> marks;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const char letter = static_cast<char>('a' + i % 26);
    for (const auto& p : family[i].points()) marks[p] = letter;
  }
  for (const auto& p : config.ends) marks[p] = 'E';
  for (const auto& p : config.starts) marks[p] = 'A';

  long x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (const auto& [p, c] : marks) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  --x0, ++x1, --y0, ++y1;

  std::ostringstream out;
  if (config.mu) out << "constraint: x >= " << *config.mu << "*y\n";
  else out << "constraint: none\n";
  for (std::size_t i = 0; i < config.size(); ++i) {
    out << "P" << i << ": " << to_string(config.starts[i]) << " -> " << to_string(config.ends[i]);
    if (i < family.size()) out << "  " << family[i].word();
    out << '\n';
  }

  const int label_width = static_cast<int>(
      std::max(std::to_string(y0).size(), std::to_string(y1).size()));
  for (long y = y1; y >= y0; --y) {
    std::string label = std::to_string(y);
    out << std::string(label_width - static_cast<int>(label.size()), ' ') << label << ' ';
    for (long x = x0; x <= x1; ++x) {
      char c = '.';
      if (auto it = marks.find({x, y}); it != marks.end()) c = it->second;
      else if (config.mu && x == *config.mu * y) c = '/';
      else if (x == 0 && y == 0) c = '+';
      else if (y == 0) c = '-';
      else if (x == 0) c = '|';
      out << ' ' << c;
    }
    out << '\n';
  }
  out << std::string(label_width + 1, ' ');
  for (long x = x0; x <= x1; ++x) {
    const long digit = (x < 0 ? -x : x) % 10;  // last digit of |x|
    out << ' ' << digit;
  }
  out << '\n';
  return out.str();
}

}  // namespace hankel
