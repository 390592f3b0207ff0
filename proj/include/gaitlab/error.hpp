#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace gaitlab {

enum class ErrorKind {
   Input,            // unparseable or malformed input
   InsufficientData, // not enough frames / items / classes
   SchemaMismatch,   // feature schema fingerprint disagreement
   Geometry,         // degenerate line or pose
};

class Error : public std::runtime_error
{
 public:
   Error(ErrorKind kind, const std::string& msg)
       : std::runtime_error(msg)
       , kind_(kind)
   {}
   ErrorKind kind() const noexcept { return kind_; }

 private:
   ErrorKind kind_;
};

// ------------------------------------------------------------------- ingest

struct MalformedLine : Error
{
   explicit MalformedLine(std::size_t line, const std::string& why = {})
       : Error(ErrorKind::Input,
               "malformed line " + std::to_string(line) + (why.empty() ? "" : ": " + why))
       , line_no(line)
   {}
   std::size_t line_no;
};

struct DuplicateFrame : Error
{
   explicit DuplicateFrame(std::int64_t frame)
       : Error(ErrorKind::Input, "duplicate frame index " + std::to_string(frame))
       , frame_index(frame)
   {}
   std::int64_t frame_index;
};

struct EmptyInput : Error
{
   EmptyInput()
       : Error(ErrorKind::Input, "no frames in input")
   {}
};

struct TooFewValidFrames : Error
{
   TooFewValidFrames(std::size_t v, std::size_t r)
       : Error(ErrorKind::InsufficientData,
               "too few valid frames: " + std::to_string(v) + " < " + std::to_string(r))
       , valid(v)
       , required(r)
   {}
   std::size_t valid;
   std::size_t required;
};

// ----------------------------------------------------------------- geometry

struct DegenerateLine : Error
{
   explicit DegenerateLine(std::string which, std::optional<std::int64_t> frame = std::nullopt)
       : Error(ErrorKind::Geometry,
               "degenerate line (" + which + ")"
                   + (frame ? " in frame " + std::to_string(*frame) : std::string{}))
       , what_line(std::move(which))
       , frame_index(frame)
   {}
   std::string what_line;
   std::optional<std::int64_t> frame_index;
};

struct DegeneratePose : Error
{
   explicit DegeneratePose(std::string block, std::optional<std::int64_t> frame = std::nullopt)
       : Error(ErrorKind::Geometry,
               "degenerate pose (" + block + ")"
                   + (frame ? " in frame " + std::to_string(*frame) : std::string{}))
       , block_name(std::move(block))
       , frame_index(frame)
   {}
   std::string block_name;
   std::optional<std::int64_t> frame_index;
};

struct IncompleteFrame : Error
{
   explicit IncompleteFrame(std::int64_t frame)
       : Error(ErrorKind::Input, "frame " + std::to_string(frame) + " is missing keypoints")
       , frame_index(frame)
   {}
   std::int64_t frame_index;
};

struct TooFewFrames : Error
{
   explicit TooFewFrames(std::size_t count)
       : Error(ErrorKind::InsufficientData,
               "need at least 2 frames to aggregate, got " + std::to_string(count))
       , n(count)
   {}
   std::size_t n;
};

// --------------------------------------------------------- classify / eval

struct InsufficientData : Error
{
   explicit InsufficientData(const std::string& why)
       : Error(ErrorKind::InsufficientData, "insufficient data: " + why)
   {}
};

struct SchemaMismatch : Error
{
   SchemaMismatch(std::string exp, std::string act)
       : Error(ErrorKind::SchemaMismatch,
               "schema fingerprint mismatch: expected " + exp + ", got " + act)
       , expected(std::move(exp))
       , actual(std::move(act))
   {}
   std::string expected;
   std::string actual;
};

struct ClassTooSmall : Error
{
   ClassTooSmall(std::string lbl, std::size_t count)
       : Error(ErrorKind::InsufficientData,
               "class " + lbl + " has " + std::to_string(count) + " items, need at least 4")
       , label(std::move(lbl))
       , n(count)
   {}
   std::string label;
   std::size_t n;
};

struct TooManyFolds : Error
{
   TooManyFolds(std::size_t f, std::size_t smallest)
       : Error(ErrorKind::InsufficientData,
               std::to_string(f) + " folds requested but smallest class has "
                   + std::to_string(smallest) + " items")
       , folds(f)
       , smallest_class(smallest)
   {}
   std::size_t folds;
   std::size_t smallest_class;
};

} // namespace gaitlab
