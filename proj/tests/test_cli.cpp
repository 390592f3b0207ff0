#include "gaitlab/table_io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args)
{
   const std::string cmd = std::string(GAITLAB_CLI_PATH) + " " + args + " >/dev/null 2>&1";
   const int status      = std::system(cmd.c_str());
   return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct Workdir
{
   fs::path path;
   Workdir() : path(fs::temp_directory_path() / ("gaitlab_cli_" + std::to_string(::getpid())))
   {
      fs::remove_all(path);
      fs::create_directories(path);
   }
   ~Workdir() { fs::remove_all(path); }
   std::string operator/(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("command line pipeline and exit codes")
{
   Workdir w;
   const auto corpus = w / "corpus";
   REQUIRE(run("synth --counts Normal=8,Parkinson=8 --frames 30 --seed 3 --out " + corpus) == 0);
   CHECK(fs::exists(w.path / "corpus" / "manifest.csv"));
   CHECK(fs::exists(w.path / "corpus" / "normal_000.kp.jsonl"));

   REQUIRE(run("extract --in " + corpus + " --out " + (w / "f.csv")) == 0);
   CHECK(gaitlab::read_video_csv_file(w / "f.csv").size() == 16);

   CHECK(run("eval --features " + (w / "f.csv") + " --algos knn,gnb --folds 3 --report " + (w / "r.json")) == 0);
   CHECK(fs::exists(w / "r.json"));

   REQUIRE(run("train --features " + (w / "f.csv") + " --algo tree --out " + (w / "m.json")) == 0);
   CHECK(run("predict --model " + (w / "m.json") + " --features " + (w / "f.csv") + " --out " + (w / "p.csv")) == 0);
   CHECK(fs::exists(w / "p.csv"));

   SUBCASE("input errors exit 2")
   {
      CHECK(run("") == 2);
      CHECK(run("train --algo knn") == 2);
      CHECK(run("extract --in " + (w / "missing") + " --out " + (w / "x.csv")) == 2);
      CHECK(run("eval --features " + (w / "f.csv") + " --task binary:Normal --report " + (w / "x.json")) == 2);
      gaitlab::write_text_file(w / "bad.csv", "not,a,feature,file\n");
      CHECK(run("train --features " + (w / "bad.csv") + " --algo knn --out " + (w / "x.json")) == 2);
   }
   SUBCASE("insufficient data exits 3")
   {
      CHECK(run("extract --in " + corpus + " --min-frames 1000 --out " + (w / "x.csv")) == 3);
      CHECK(run("eval --features " + (w / "f.csv") + " --folds 9 --algos knn --report " + (w / "x.json")) == 3);
      CHECK(run("train --features " + (w / "f.csv") + " --algo knn --task binary:Diplegia --out " + (w / "x.json")) == 3);
   }
   SUBCASE("schema mismatch exits 4")
   {
      REQUIRE(run("extract --in " + corpus + " --norm-scope video --out " + (w / "fv.csv")) == 0);
      CHECK(run("predict --model " + (w / "m.json") + " --features " + (w / "fv.csv") + " --out " + (w / "x.csv")) == 4);
   }
}
