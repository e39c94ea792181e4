#include "turmite/render.hpp"

#include <algorithm>
#include <string>

namespace turmite {

Window frame(const Configuration& config, const Pose& pose, Coord padding) {
  Window w{pose.cell, pose.cell};
  for (const auto& [cell, _] : config.overrides()) {
    w.lo.x = std::min(w.lo.x, cell.x);
    w.lo.y = std::min(w.lo.y, cell.y);
    w.hi.x = std::max(w.hi.x, cell.x);
    w.hi.y = std::max(w.hi.y, cell.y);
  }
  w.lo.x -= padding;
  w.lo.y -= padding;
  w.hi.x += padding;
  w.hi.y += padding;
  return w;
}

void write_pgm(std::ostream& out, const Configuration& config,
               const Window& window, const std::optional<Cell>& head) {
  const int n = config.colors();
  out << "P5\n" << window.width() << ' ' << window.height() << "\n255\n";
  std::string row(static_cast<std::size_t>(window.width()), '\0');
  for (Coord y = window.hi.y; y >= window.lo.y; --y) {
    for (Coord x = window.lo.x; x <= window.hi.x; ++x) {
      int symbol = config.at({x, y});
      int gray = n > 1 ? 255 * (n - 1 - symbol) / (n - 1) : 255;
      if (head && x >= head->x - 1 && x <= head->x + 1 && y >= head->y - 1 &&
          y <= head->y + 1)
        gray = 0;
      row[static_cast<std::size_t>(x - window.lo.x)] =
          static_cast<char>(gray);
    }
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
}

void write_csv(std::ostream& out, const std::vector<TrajectoryPoint>& points) {
  out << "step,x,y,dir\n";
  for (const auto& p : points) {
    out << p.step << ',' << p.pose.cell.x << ',' << p.pose.cell.y << ','
        << to_char(p.pose.dir) << '\n';
  }
}

}  // namespace turmite
