// Copyright 2026 The voicecomp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <mutex>

#include "voicecomp/augment.hpp"
#include "voicecomp/intent.hpp"
#include "voicecomp/metrics.hpp"
#include "voicecomp/pipeline.hpp"
#include "voicecomp/punctuation.hpp"
#include "voicecomp/sensitivity.hpp"

namespace py = pybind11;
using namespace voicecomp;

namespace {

const Pipeline& shared_pipeline() {
  static std::once_flag once;
  static std::unique_ptr<Pipeline> pipeline;
  std::call_once(once, [] { pipeline = std::make_unique<Pipeline>(); });
  return *pipeline;
}

std::string compose_json(const std::string& transcript, std::optional<std::string> content_type, std::uint64_t seed,
                         bool trace) {
  ComposeRequest req;
  req.transcript = transcript;
  if (content_type) {
    req.content_type = parse_content_type(*content_type);
    if (!req.content_type) throw py::value_error("content_type must be one of email|message|notes");
  }
  req.seed = seed;
  req.trace = trace;
  py::gil_scoped_release release;
  return shared_pipeline().run(req).to_json(trace).dump();
}

RougeVariant rouge_variant(const std::string& name) {
  if (name == "R1" || name == "rouge1") return RougeVariant::kR1;
  if (name == "R2" || name == "rouge2") return RougeVariant::kR2;
  if (name == "RL" || name == "rougeL") return RougeVariant::kRL;
  throw py::value_error("variant must be R1, R2 or RL");
}

}  // namespace

PYBIND11_MODULE(_voicecomp, m) {
  m.doc() = "Bindings for the voicecomp C++ pipeline";

  // Translators run last-registered first, so the base goes first.
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DataError>(m, "DataError", base.ptr());
  py::register_exception<RequestError>(m, "RequestError", base.ptr());
  py::register_exception<ContractError>(m, "ContractError", base.ptr());

  m.def("compose_json", &compose_json, py::arg("transcript"), py::arg("content_type") = py::none(),
        py::arg("seed") = 0, py::arg("trace") = false);
  m.def(
      "normalize",
      [](const std::string& text) {
        py::gil_scoped_release release;
        return shared_pipeline().normalize_only(text).text;
      },
      py::arg("text"));
  m.def(
      "classify_intent",
      [](const std::string& text) {
        const auto i = classify_intent(text);
        return py::dict(py::arg("input_type") = std::string(to_string(i.input_type)),
                        py::arg("content_type") = std::string(to_string(i.content_type)),
                        py::arg("endedness") = std::string(to_string(i.endedness)));
      },
      py::arg("text"));
  m.def(
      "sensitivity_score",
      [](const std::string& text) {
        const auto v = sensitivity_score(text);
        return py::dict(py::arg("score") = v.score, py::arg("matched_terms") = v.matched_terms,
                        py::arg("blocked") = v.blocked);
      },
      py::arg("text"));
  m.def(
      "augment",
      [](const std::string& spec, const std::string& text) {
        return compose_augmentations(parse_augmentation_chain(spec), text);
      },
      py::arg("spec"), py::arg("text"));
  m.def(
      "align",
      [](const Words& ref, const Words& hyp) {
        const auto ops = align(ref, hyp);
        return py::dict(py::arg("hits") = ops.hits, py::arg("substitutions") = ops.substitutions,
                        py::arg("deletions") = ops.deletions, py::arg("insertions") = ops.insertions,
                        py::arg("ref_len") = ops.ref_len);
      },
      py::arg("ref"), py::arg("hyp"));
  m.def(
      "wer_wrr",
      [](const Words& ref, const Words& hyp) {
        const auto w = wer_wrr(align(ref, hyp));
        return py::make_tuple(w.wer, w.wrr);
      },
      py::arg("ref"), py::arg("hyp"));
  m.def("bleu", &bleu, py::arg("references"), py::arg("hypothesis"), py::arg("max_n") = 4);
  m.def(
      "rouge",
      [](const Words& ref, const Words& hyp, const std::string& variant) {
        const auto p = rouge(ref, hyp, rouge_variant(variant));
        return py::make_tuple(p.precision, p.recall, p.f1);
      },
      py::arg("reference"), py::arg("hypothesis"), py::arg("variant") = "RL");
  m.def(
      "punct_round_trip",
      [](const std::string& text) {
        const auto ex = extract_punct_labels(text);
        return apply_punct_labels(ex.tokens, ex.labels);
      },
      py::arg("text"));
}
