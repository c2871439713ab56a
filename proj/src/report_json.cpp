#include "sp4eis/report_json.hpp"

#include "sp4eis/lgerms.hpp"
#include "sp4eis/local_ops.hpp"

namespace sp4eis {

Json to_json(const OrderValue &v)
{
  Json j;
  j["text"] = to_string(v);
  j["base"] = v.base;
  j["known"] = v.is_known();
  j["unknown_zeros"] = v.unknown_zeros;
  j["unknown_poles"] = v.unknown_poles;
  j["strip_values"] = v.strip_values;
  return j;
}

namespace {

Json place_json(const PlaceSpec &p)
{
  return Json{{"name", p.name}, {"kind", to_string(p.kind)}, {"char", to_string(p.local_char)},
              {"choice", p.choice.text}};
}

Json image_json(const PlaceImage &im)
{
  return Json{{"place", im.place}, {"label", im.label}, {"structure", im.structure}};
}

}  // namespace

Json to_json(const ConstantTermReport &r)
{
  Json j;
  j["case"] = to_string(r.cs);
  j["s0"] = to_string(r.s0);
  j["char"] = to_string(r.profile.global_char);
  Json places = Json::array();
  for(const auto &p : r.profile.places)
    places.push_back(place_json(p));
  j["places"] = places;

  Json terms = Json::array();
  for(const auto &t : r.terms)
    {
      Json tj;
      tj["w"] = t.w.name();
      tj["alias"] = t.w.alias();
      tj["factor"] = to_string(t.expr);
      tj["factor_fe"] = to_string(t.expr_fe);
      tj["global_order"] = to_json(t.global_order);
      tj["local_poles"] = t.local_poles;
      tj["weight"] = t.weight;
      tj["term_order"] = to_json(t.term_order);
      tj["target"] = to_string(t.target);
      Json ims = Json::array();
      for(const auto &im : t.images)
        ims.push_back(image_json(im));
      tj["images"] = ims;
      tj["citations"] = t.citations;
      terms.push_back(tj);
    }
  j["terms"] = terms;

  Json groups = Json::array();
  for(std::size_t g = 0; g < r.groups.size(); ++g)
    {
      Json members = Json::array();
      for(int i : r.groups[g])
        members.push_back(r.terms[i].w.name());
      Json gj{{"members", members}, {"live", bool(r.group_live[g])}};
      gj["order"] = r.group_live[g] ? to_json(r.group_orders[g]) : Json(nullptr);
      groups.push_back(gj);
    }
  j["groups"] = groups;
  j["combined_order"] = to_json(r.combined);

  Json pole;
  if(r.pole.value)
    pole["order"] = *r.pole.value;
  else
    pole["order"] = nullptr;
  pole["exact"] = r.pole.exact;
  pole["condition"] = r.pole.condition;
  pole["text"] = to_string(r.pole);
  j["pole"] = pole;
  j["vanishing"] = r.vanishing;
  Json image = Json::array();
  for(const auto &im : r.image)
    image.push_back(image_json(im));
  j["image"] = image;
  return j;
}

Json to_json(const ClauseRow &r)
{
  Json j{{"theorem", to_string(r.theorem)}, {"clause", r.clause},     {"template", r.description},
         {"expected", r.expected},           {"computed", r.computed}, {"pass", r.pass},
         {"citation", r.citation}};
  if(!r.note.empty())
    j["note"] = r.note;
  return j;
}

Json to_json(const NumericCheckRow &r)
{
  return Json{{"check", r.label},       {"expected", r.expected},   {"computed", r.computed},
              {"residual", r.residual}, {"tolerance", r.tolerance}, {"pass", r.pass}};
}

Json weyl_json()
{
  const auto &g = sp4_weyl_group();
  auto row = [&](const WeylElement &w) {
    Json neg = Json::array();
    for(const auto &a : g.negative_set(w))
      neg.push_back(to_string(a));
    return Json{{"w", w.name()}, {"alias", w.alias()}, {"length", w.length()}, {"negative_set", neg}};
  };
  Json j;
  for(Case cs : {Case::Heisenberg, Case::Siegel})
    {
      Json rows = Json::array();
      for(const auto &w : case_coset_reps(cs))
        rows.push_back(row(w));
      j[to_string(cs)] = rows;
    }
  Json all = Json::array();
  for(const auto &w : g.elements())
    all.push_back(row(w));
  j["group"] = all;
  return j;
}

Json normfactor_json(Case cs, const WeylElement &w)
{
  const LExpression e = inverse_norm_factor(sp4_weyl_group(), case_lambda(cs), w);
  return Json{{"case", to_string(cs)},
              {"w", w.name()},
              {"alias", w.alias()},
              {"factor", to_string(e)},
              {"factor_fe", to_string(apply_functional_equation(e))}};
}

Json envelope(const std::string &command, Json payload, bool pass)
{
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  for(auto it = payload.begin(); it != payload.end(); ++it)
    j[it.key()] = it.value();
  j["pass"] = pass;
  return j;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

}  // namespace sp4eis
