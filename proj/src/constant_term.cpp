#include "sp4eis/constant_term.hpp"

#include <algorithm>
#include <set>

namespace sp4eis {

void PlaceProfile::validate() const
{
  if(global_char == CharClass::Sgn)
    throw std::invalid_argument("global character class cannot be sgn");
  int arch = 0;
  std::set<std::string> names;
  for(const auto &p : places)
    {
      if(!names.insert(p.name).second)
        throw std::invalid_argument("duplicate place '" + p.name + "'");
      if(p.kind == PlaceKind::Arch)
        ++arch;
      else if(p.local_char == CharClass::Sgn)
        throw std::invalid_argument("place '" + p.name + "': sgn only occurs at the archimedean place");
      if(p.choice.text.empty())
        throw std::invalid_argument("place '" + p.name + "': empty choice");
    }
  if(arch != 1)
    throw std::invalid_argument("profile needs exactly one archimedean place, got " + std::to_string(arch));
}

PlaceProfile PlaceProfile::spherical(CharClass global, CharClass arch_char)
{
  PlaceProfile p;
  p.global_char = global;
  p.places.push_back({"inf", PlaceKind::Arch, arch_char, SubquotientLabel::spherical()});
  return p;
}

PlaceProfile &PlaceProfile::add_finite(int count, CharClass local_char, const std::string &choice)
{
  for(int i = 0; i < count; ++i)
    places.push_back({"p" + std::to_string(finite_count() + 1), PlaceKind::NonArch, local_char, {choice}});
  return *this;
}

PlaceProfile &PlaceProfile::set_arch(CharClass local_char, const std::string &choice)
{
  for(auto &p : places)
    if(p.kind == PlaceKind::Arch)
      {
        p.local_char = local_char;
        p.choice = {choice};
      }
  return *this;
}

int PlaceProfile::finite_count() const
{
  return static_cast<int>(std::count_if(places.begin(), places.end(),
                                        [](const PlaceSpec &p) { return p.kind == PlaceKind::NonArch; }));
}

std::string to_string(const PoleOrder &p)
{
  if(!p.value)
    return "conditional: " + p.condition;
  if(!p.exact)
    return "<=" + std::to_string(*p.value);
  return std::to_string(*p.value);
}

namespace {

struct LocalEffect
{
  int poles = 0;
  int weight = 1;
  std::vector<PlaceImage> images;
  std::vector<std::string> citations;
  std::vector<std::string> residues;
};

LocalEffect local_effect(Case cs, const PlaceProfile &profile, const WeylElement &w, const Rational &s0,
                         const RuleTable &rules)
{
  LocalEffect eff;
  for(const auto &place : profile.places)
    {
      const LocalRuleKey key{cs, w, place.kind, place.local_char, s0};
      const LocalOutcome out = rules.resolve(key, place.choice);
      eff.poles += out.pole;
      if(out.pole)
        eff.residues.push_back("Res[" + w.name() + "," + place.name + "]");
      if(out.action == Action::Kernel)
        eff.weight = 0;
      else if(out.action == Action::Minus)
        eff.weight = -eff.weight;
      eff.images.push_back({place.name, out.image == "-" ? place.choice.text : out.image, out.structure});
      if(!out.citation.empty())
        eff.citations.push_back(out.citation);
    }
  return eff;
}

Germ local_germ(const LocalEffect &eff, const KnowledgeBase &kb)
{
  Monomial m;
  for(const auto &r : eff.residues)
    m[r] += 1;
  Series s = Series::constant(Poly{{m, Rational(1)}}, kb.depth);
  s.order = -eff.poles;
  return Germ::from_series(s, kb);
}

}  // namespace

OrderValue term_order(Case cs, const PlaceProfile &profile, const WeylElement &w, const Rational &s0,
                      const RuleTable &rules)
{
  profile.validate();
  const auto &g = sp4_weyl_group();
  const LExpression e = inverse_norm_factor(g, case_lambda(cs), w);
  const LocalEffect eff = local_effect(cs, profile, w, s0, rules);
  return order_at(e, profile.global_char, s0) + OrderValue::known(-eff.poles);
}

std::vector<std::vector<WeylElement>> same_target_groups(Case cs, const Rational &s0, CharClass global_char)
{
  const TorusCharacter lambda = case_lambda(cs);
  std::vector<std::vector<WeylElement>> groups;
  std::vector<TorusCharacter> targets;
  for(const auto &w : case_coset_reps(cs))
    {
      const TorusCharacter t = weyl_act(w, lambda);
      bool placed = false;
      for(std::size_t i = 0; i < groups.size() && !placed; ++i)
        if(equal_at(targets[i], t, s0, global_char))
          {
            groups[i].push_back(w);
            placed = true;
          }
      if(!placed)
        {
          groups.push_back({w});
          targets.push_back(t);
        }
    }
  return groups;
}

ConstantTermReport eisenstein_order(Case cs, const PlaceProfile &profile, const Rational &s0,
                                    const RuleTable &rules)
{
  profile.validate();
  const KnowledgeBase &kb = KnowledgeBase::standard();
  const auto &g = sp4_weyl_group();
  const TorusCharacter lambda = case_lambda(cs);

  ConstantTermReport rep;
  rep.cs = cs;
  rep.s0 = s0;
  rep.profile = profile;

  std::vector<Germ> germs;
  for(const auto &w : case_coset_reps(cs))
    {
      TermReport t;
      t.w = w;
      t.expr = inverse_norm_factor(g, lambda, w);
      t.expr_fe = apply_functional_equation(t.expr, profile.global_char);
      const Germ rg = expand(t.expr, profile.global_char, s0, kb);
      t.global_order = rg.order;
      const LocalEffect eff = local_effect(cs, profile, w, s0, rules);
      t.local_poles = eff.poles;
      t.weight = eff.weight;
      t.images = eff.images;
      t.citations = eff.citations;
      t.target = weyl_act(w, lambda);
      const Germ tg = rg * local_germ(eff, kb);
      t.term_order = tg.order;
      germs.push_back(tg);
      rep.terms.push_back(std::move(t));
    }

  for(const auto &grp : same_target_groups(cs, s0, profile.global_char))
    {
      std::vector<int> idx;
      for(const auto &w : grp)
        for(std::size_t i = 0; i < rep.terms.size(); ++i)
          if(rep.terms[i].w == w)
            idx.push_back(static_cast<int>(i));
      rep.groups.push_back(idx);
    }

  std::vector<OrderValue> live;
  for(const auto &idx : rep.groups)
    {
      std::vector<std::pair<Germ, Rational>> summands;
      for(int i : idx)
        if(rep.terms[i].weight != 0)
          summands.push_back({germs[i], Rational(rep.terms[i].weight)});
      if(summands.empty())
        {
          rep.group_orders.push_back(OrderValue{});
          rep.group_live.push_back(false);
          continue;
        }
      const Germ sum = sum_germs(summands, kb);
      rep.group_orders.push_back(sum.order);
      rep.group_live.push_back(true);
      live.push_back(sum.order);
    }

  if(live.empty())
    {
      rep.combined = OrderValue{0, 1, 0, {}};
      rep.vanishing = true;
      rep.pole = PoleOrder{0, true, ""};
      return rep;
    }
  rep.combined = min_order(live);

  if(auto lb = rep.combined.lower_bound())
    {
      rep.vanishing = *lb >= 1;
      rep.pole.value = std::max(0, -*lb);
      rep.pole.exact = rep.combined.is_known() || *lb >= 0;
    }
  else
    {
      std::vector<std::string> uniq;
      for(const auto &s : rep.combined.strip_values)
        if(std::find(uniq.begin(), uniq.end(), s) == uniq.end())
          uniq.push_back(s);
      std::string cond = "pole order equals the order of vanishing of ";
      for(std::size_t i = 0; i < uniq.size(); ++i)
        cond += (i ? " / " : "") + uniq[i];
      if(rep.combined.base != 0)
        cond += " minus " + std::to_string(rep.combined.base);
      rep.pole.value.reset();
      rep.pole.exact = false;
      rep.pole.condition = cond;
    }

  // Image: the longest dominant non-identity term decides the local images.
  const std::optional<int> floor = rep.combined.lower_bound();
  const TermReport *dominant = nullptr;
  for(std::size_t gi = 0; gi < rep.groups.size(); ++gi)
    {
      if(!rep.group_live[gi])
        continue;
      const auto glb = rep.group_orders[gi].lower_bound();
      if(floor && glb && *glb != *floor)
        continue;
      for(int i : rep.groups[gi])
        if(rep.terms[i].weight != 0 && !(rep.terms[i].w == WeylElement::identity(2))
           && (!dominant || dominant->w.length() < rep.terms[i].w.length()))
          dominant = &rep.terms[i];
    }
  for(const auto &place : profile.places)
    {
      PlaceImage im{place.name, place.choice.text, "embedding"};
      if(dominant)
        for(const auto &ti : dominant->images)
          if(ti.place == place.name)
            im = ti;
      rep.image.push_back(im);
    }
  return rep;
}

}  // namespace sp4eis
