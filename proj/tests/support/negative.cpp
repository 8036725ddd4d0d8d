#include "negative.hpp"

#include "fixtures.hpp"
#include "novbi/constructions.hpp"

namespace novbi::testing {

namespace {

Bilinear product2(std::vector<std::vector<long>> table) {
  // table[2 * i + j] = coefficients of e_i * e_j.
  Bilinear b(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) b.set_product(i, j, ivec(table[2 * i + j]));
  return b;
}

Coproduct coproduct2(std::vector<std::vector<long>> images) {
  // images[i] = row-major coefficients of delta(e_i) on e_j (x) e_k.
  Coproduct c(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t f = 0; f < 4; ++f) c.set(i, f / 2, f % 2, Scalar(images[i][f]));
  return c;
}

Tensor matrix2(std::vector<long> entries) {
  Tensor t({2, 2});
  for (std::size_t f = 0; f < 4; ++f) t.set_flat(f, Scalar(entries[f]));
  return t;
}

NegativeControl with_env(std::string name, std::string id, Env env) {
  NegativeControl c;
  c.name = std::move(name);
  c.axiom_id = std::move(id);
  c.env = std::move(env);
  return c;
}

}  // namespace

Env scrambled_env() {
  Env env;
  env.spaces["A"] = 2;
  env.spaces["V"] = 2;
  env.bilinears["circ"] = product2({{0, 1}, {1, 0}, {1, 1}, {-1, 0}});
  env.bilinears["dot"] = product2({{1, 1}, {0, 1}, {1, 0}, {0, 1}});
  env.bilinears["diamond"] = product2({{0, 1}, {1, 0}, {0, 0}, {1, 1}});
  env.bilinears["lhd"] = product2({{1, 0}, {0, 1}, {0, 0}, {1, 0}});
  env.bilinears["rhd"] = product2({{0, 1}, {1, 1}, {1, 0}, {0, 0}});
  env.bilinears["f"] = product2({{1, 1}, {0, 1}, {1, 0}, {0, 0}});
  env.bilinears["lact"] = product2({{0, 1}, {1, 0}, {1, 1}, {0, 0}});
  env.bilinears["ract"] = product2({{1, 0}, {0, 0}, {0, 1}, {1, 1}});
  env.maps["D"] = imat({{1, 2}, {0, 1}});
  env.maps["Q"] = imat({{0, 1}, {1, 3}});
  env.maps["alpha"] = imat({{2, 0}, {1, 0}});
  env.maps["beta"] = imat({{0, 0}, {1, -1}});
  env.maps["T"] = imat({{1, 0}, {1, 1}});
  env.coproducts["delta"] = coproduct2({{0, 1, 0, 0}, {1, 0, 0, 1}});
  env.coproducts["Delta"] = coproduct2({{0, 1, 0, 0}, {1, 0, 1, 0}});
  env.tensors["B"] = matrix2({1, 2, 0, 1});
  env.tensors["r"] = matrix2({1, 2, 0, 1});
  return env;
}

std::vector<NegativeControl> negative_controls() {
  std::vector<NegativeControl> out;

  {
    // e1 o e2 = e1: left symmetry fails first at (e1, e2, e2) with residual e1.
    Bilinear circ(2);
    circ.set(0, 1, 0, 1);
    NegativeControl c = with_env("e1 o e2 = e1", "NOV_LSYM", algebra_env({{"circ", circ}}));
    c.tuple = std::vector<std::size_t>{0, 1, 1};
    c.residual = ivec({1, 0});
    out.push_back(c);
  }
  {
    Presentation p = exnov1();
    NegativeControl c = with_env("exnov1 with Q = id", "ADMISS",
                                 algebra_env({{"dot", p.product("dot")}},
                                             {{"D", p.map("D")}, {"Q", LinMap::identity(2)}}));
    c.tuple = std::vector<std::size_t>{0, 1};
    c.residual = ivec({0, 1});
    out.push_back(c);
  }
  {
    Env env;
    env.spaces["A"] = 2;
    env.coproducts["delta"] = coproduct2({{0, 1, 0, 0}, {0, 0, 0, 0}});
    NegativeControl c = with_env("delta(e1) = e1 (x) e2", "COCOMM", env);
    c.tuple = std::vector<std::size_t>{0};
    c.residual = matrix2({0, 1, -1, 0});
    out.push_back(c);
  }
  {
    Presentation p = exnov1();
    NegativeControl c = with_env("T = id on the regular rep of exnov1", "OOP_COMM",
                                 rep_env({{"dot", p.product("dot")}}, {{"T", LinMap::identity(2)}},
                                         {{"lact", p.product("dot")}}, 2));
    c.tuple = std::vector<std::size_t>{0, 0};
    c.residual = ivec({-1, 0});
    out.push_back(c);
  }
  {
    Env env;
    env.spaces["A"] = 2;
    env.tensors["B"] = Tensor({2, 2});
    NegativeControl c = with_env("B = 0", "FORM_NONDEG", env);
    c.tuple = std::vector<std::size_t>{};
    out.push_back(c);
  }
  {
    Presentation p = exnov1();
    Env env = algebra_env({{"dot", p.product("dot")}});
    env.tensors["r"] = matrix2({1, 0, 0, 0});
    NegativeControl c = with_env("r = e1 (x) e1 on exnov1", "AYBE", env);
    c.tuple = std::vector<std::size_t>{};
    Tensor res({2, 2, 2});
    res.set({0, 0, 0}, Scalar(1));
    c.residual = res;
    out.push_back(c);
  }

  Env wild = scrambled_env();
  for (const auto& spec : catalog()) {
    if (spec.kind != AxiomSpec::Kind::Multilinear) continue;
    out.push_back(with_env("scrambled", spec.id, wild));
  }
  return out;
}

}  // namespace novbi::testing
