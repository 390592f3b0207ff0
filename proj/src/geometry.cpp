#include "gaitlab/geometry.hpp"

#include "gaitlab/error.hpp"

#include <cmath>

namespace gaitlab {

double norm(Point2 a) noexcept { return std::hypot(a.x, a.y); }
double distance(Point2 a, Point2 b) noexcept { return norm(b - a); }

double point_line_distance(Point2 p, Point2 a, Point2 b, const char* which)
{
   const Point2 dir = b - a;
   const double len = norm(dir);
   if(len < k_degenerate_eps) throw DegenerateLine(which);
   return std::abs(cross(dir, p - a)) / len;
}

double undirected_angle(Point2 u, Point2 v, const char* which_u, const char* which_v)
{
   if(norm(u) < k_degenerate_eps) throw DegenerateLine(which_u);
   if(norm(v) < k_degenerate_eps) throw DegenerateLine(which_v);
   // |dot| folds the line angle into [0, pi/2]
   return std::atan2(std::abs(cross(u, v)), std::abs(dot(u, v)));
}

} // namespace gaitlab
