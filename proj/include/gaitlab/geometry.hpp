#pragma once

namespace gaitlab {

inline constexpr double k_degenerate_eps = 1e-9; // pixels

struct Point2
{
   double x = 0.0;
   double y = 0.0;

   friend Point2 operator+(Point2 a, Point2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
   friend Point2 operator-(Point2 a, Point2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
   friend Point2 operator*(double s, Point2 a) noexcept { return {s * a.x, s * a.y}; }
   friend bool operator==(Point2, Point2) = default;
};

inline Point2 midpoint(Point2 a, Point2 b) noexcept { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }
inline double cross(Point2 a, Point2 b) noexcept { return a.x * b.y - a.y * b.x; }
inline double dot(Point2 a, Point2 b) noexcept { return a.x * b.x + a.y * b.y; }
double norm(Point2 a) noexcept;
double distance(Point2 a, Point2 b) noexcept;

// Distance from p to the infinite line through a and b, |(b-a) x (p-a)| / |b-a|.
// Works for vertical lines. Throws DegenerateLine(`which`) if |b-a| < eps.
double point_line_distance(Point2 p, Point2 a, Point2 b, const char* which = "line");

// Angle in [0, pi/2] between the undirected lines along u and v.
// Throws DegenerateLine naming the vector shorter than eps.
double undirected_angle(Point2 u, Point2 v, const char* which_u = "line", const char* which_v = "line");

} // namespace gaitlab
