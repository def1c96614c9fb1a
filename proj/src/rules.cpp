#include "mmcg/rules.hpp"

#include <algorithm>

namespace mmcg {

  double RuleSet::weightOf(std::string const& name) const {
    auto it = ruleWeights.find(name);
    return it == ruleWeights.end() ? 0.0 : it->second;
  }

  std::string RuleSet::describe() const {
    std::string out = "ab";
    auto add = [&](bool on, char const* n) {
      if (on) { out += ' '; out += n; }
    };
    add(extract1, "extract1");
    add(extract0, "extract0");
    add(wrap, "wrap");
    add(product, "product");
    add(lnr, "lnr");
    add(qspeech, "qspeech");
    add(popAtVP, "popAtVP");
    return out;
  }

  namespace {

    Formula const& atomS() {
      static Formula const s = Formula::atom("s");
      return s;
    }
    Formula const& atomNp() {
      static Formula const np = Formula::atom("np");
      return np;
    }

    void pushUnique(std::vector<Formula>& v, Formula const& f) {
      if (std::find(v.begin(), v.end(), f) == v.end()) v.push_back(f);
    }

    // Y/dia0 box0 B
    std::optional<std::pair<Formula, Formula>> withdrawnShape(Formula const& f) {
      if (!f.isSlash(Dir::Forward, Mode::Main)) return std::nullopt;
      auto b = f.argument().diaBoxBody(Mode::M0);
      if (!b) return std::nullopt;
      return std::make_pair(f.result(), *b);
    }

    // (dia0 box0 X)\X
    std::optional<Formula> lnrShape(Formula const& f) {
      if (!f.isSlash(Dir::Backward, Mode::Main)) return std::nullopt;
      auto x = f.argument().diaBoxBody(Mode::M0);
      if (!x || !(*x == f.result())) return std::nullopt;
      return x;
    }

    // V of (s/np)/V when `generalResult` is false, of (X/np)/V otherwise.
    std::optional<Formula> auxComplement(Formula const& f, bool generalResult) {
      if (!f.isSlash(Dir::Forward, Mode::Main)) return std::nullopt;
      auto const& inner = f.result();
      if (!inner.isSlash(Dir::Forward, Mode::Main) || !(inner.argument() == atomNp())) return std::nullopt;
      if (!generalResult && !(inner.result() == atomS())) return std::nullopt;
      return f.argument();
    }

    // V of s\1 V
    std::optional<Formula> quotedVerbCore(Formula const& f) {
      if (!f.isSlash(Dir::Backward, Mode::M1) || !(f.argument() == atomS())) return std::nullopt;
      return f.result();
    }

    Term norm(RuleContext const& ctx, Term const& t) { return betaNormalize(t, ctx.reductionBudget); }

    std::string freshVarFor(std::initializer_list<Term const*> terms) {
      std::set<std::string> avoid;
      for (auto const* t : terms) {
        auto fv = freeVariables(*t);
        avoid.insert(fv.begin(), fv.end());
      }
      return freshName("x", avoid);
    }

    ChartItem make(RuleContext const& ctx, char const* ruleName, Antecedent ant, Formula f, int left, int right,
                   ExtractionSet ext, WrapStack stack, Term sem, std::initializer_list<ChartItem const*> premises) {
      double w = ctx.rules.weightOf(ruleName);
      std::vector<ItemId> ids;
      for (auto const* p : premises) {
        w += p->weight;
        ids.push_back(p->id);
      }
      return ChartItem{std::move(ant), std::move(f), left, right, std::move(ext), std::move(stack), w,
                       norm(ctx, sem), Provenance{ruleName, std::move(ids)}, 0};
    }

    // The tag of `ext` with the given key, if any.
    std::optional<ExtractionTag> findTag(ExtractionSet const& ext, int licPos, Formula const& b, Mode mode) {
      for (auto const& t : ext)
        if (t.licPos == licPos && t.mode == mode && t.hypFormula == b) return t;
      return std::nullopt;
    }

  } // namespace

  RuleSet scanTriggers(std::vector<Formula> const& lexFormulas, std::optional<Formula> const& goal) {
    RuleSet rs;
    std::vector<Formula> arguments;
    for (auto const& top : lexFormulas) {
      top.forEachSubformula([&](Formula const& f) {
        if (f.isSlash()) pushUnique(arguments, f.argument());
        if (auto lic = matchExtractionLicensor(f)) {
          if (lic->mode == Mode::M1) rs.extract1 = true;
          else rs.extract0 = true;
          if (lic->orientation == Orientation::Leftward) pushUnique(rs.peripheralHyps, lic->b);
        }
        if (f.isModifier(Mode::M1)) rs.wrap = true;
      });
    }
    for (auto const& a : arguments) {
      if (a.isProduct()) rs.product = true;
      if (auto x = lnrShape(a)) {
        rs.lnr = true;
        pushUnique(rs.lnrTargets, *x);
      }
    }
    for (auto const& aux : lexFormulas) {
      auto v = auxComplement(aux, true);
      if (!v) continue;
      for (auto const& core : lexFormulas)
        if (auto cv = quotedVerbCore(core); cv && *cv == *v) rs.qspeech = true;
    }
    // quoted-speech tags are s\1 s items and only make sense with wrapping
    if (rs.qspeech) rs.wrap = true;
    if (goal) {
      if (auto w = withdrawnShape(*goal)) {
        rs.extract0 = true;
        rs.withdrawGoal = *goal;
        pushUnique(rs.peripheralHyps, w->second);
      }
    }
    return rs;
  }

  MaybeItem ruleFE(RuleContext& ctx, ChartItem const& f, ChartItem const& a) {
    if (f.right != a.left || !f.formula.isSlash(Dir::Forward, Mode::Main) || !(f.formula.argument() == a.formula))
      return std::nullopt;
    auto ext = disjointUnion(f.ext, a.ext);
    if (!ext) return std::nullopt;
    return make(ctx, rule::FE, Antecedent::node(Mode::Main, f.antecedent, a.antecedent), f.formula.result(), f.left,
                a.right, std::move(*ext), concat(f.stack, a.stack), Term::app(f.semantics, a.semantics), {&f, &a});
  }

  MaybeItem ruleBsE(RuleContext& ctx, ChartItem const& a, ChartItem const& f) {
    if (a.right != f.left || !f.formula.isSlash(Dir::Backward, Mode::Main) || !(f.formula.argument() == a.formula))
      return std::nullopt;
    auto ext = disjointUnion(a.ext, f.ext);
    if (!ext) return std::nullopt;
    return make(ctx, rule::BsE, Antecedent::node(Mode::Main, a.antecedent, f.antecedent), f.formula.result(), a.left,
                f.right, std::move(*ext), concat(a.stack, f.stack), Term::app(f.semantics, a.semantics), {&a, &f});
  }

  MaybeItem ruleEStart(RuleContext& ctx, ChartItem const& lic, ChartItem const& f, Mode mode) {
    auto m = matchExtractionLicensor(lic.formula);
    if (!m || m->mode != mode || m->orientation != Orientation::Rightward) return std::nullopt;
    if (!f.formula.isSlash(Dir::Forward, Mode::Main) || !(f.formula.argument() == m->b)) return std::nullopt;
    if (lic.right > f.left) return std::nullopt;
    ExtractionTag tag{lic.right, f.right, m->b, mode};
    auto ext = f.ext;
    if (!ext.insert(tag)) return std::nullopt;
    auto hyp = Term::var(ctx.vars.name(lic.right, m->b, mode));
    // the licensor is only a trigger here: it contributes neither weight nor material
    auto item = make(ctx, rule::EStart, f.antecedent, f.formula.result(), f.left, f.right, std::move(ext), f.stack,
                     Term::app(f.semantics, hyp), {&f});
    item.provenance.premises.insert(item.provenance.premises.begin(), lic.id);
    return item;
  }

  MaybeItem ruleEStartPeripheral(RuleContext& ctx, ChartItem const& f, Formula const& b) {
    if (!f.formula.isSlash(Dir::Forward, Mode::Main) || !(f.formula.argument() == b)) return std::nullopt;
    ExtractionTag tag{f.right, f.right, b, Mode::M0};
    auto ext = f.ext;
    if (!ext.insert(tag)) return std::nullopt;
    auto hyp = Term::var(ctx.vars.name(f.right, b, Mode::M0));
    return make(ctx, rule::EStart, f.antecedent, f.formula.result(), f.left, f.right, std::move(ext), f.stack,
                Term::app(f.semantics, hyp), {&f});
  }

  MaybeItem ruleEEnd(RuleContext& ctx, ChartItem const& lic, ChartItem const& y, Mode mode) {
    auto m = matchExtractionLicensor(lic.formula);
    if (!m || m->mode != mode || m->orientation != Orientation::Rightward) return std::nullopt;
    if (!(y.formula == m->y) || lic.right != y.left || !y.stack.empty()) return std::nullopt;
    auto t = findTag(y.ext, lic.right, m->b, mode);
    if (!t || t->peripheral()) return std::nullopt;
    if (mode == Mode::M0 && t->hypSite != y.right) return std::nullopt;
    auto ext = disjointUnion(lic.ext, y.ext.without(*t));
    if (!ext) return std::nullopt;
    auto var = ctx.vars.name(t->licPos, t->hypFormula, t->mode);
    return make(ctx, rule::EEnd, Antecedent::node(Mode::Main, lic.antecedent, y.antecedent), m->x, lic.left, y.right,
                std::move(*ext), lic.stack, Term::app(lic.semantics, Term::abs(var, y.semantics)), {&lic, &y});
  }

  MaybeItem ruleEEndLeft(RuleContext& ctx, ChartItem const& y, ChartItem const& lic) {
    auto m = matchExtractionLicensor(lic.formula);
    if (!m || m->orientation != Orientation::Leftward) return std::nullopt;
    if (!(y.formula == m->y) || y.right != lic.left || !y.stack.empty()) return std::nullopt;
    auto t = findTag(y.ext, y.right, m->b, Mode::M0);
    if (!t || !t->peripheral()) return std::nullopt;
    auto ext = disjointUnion(y.ext.without(*t), lic.ext);
    if (!ext) return std::nullopt;
    auto var = ctx.vars.name(t->licPos, t->hypFormula, Mode::M0);
    return make(ctx, rule::EEndLeft, Antecedent::node(Mode::Main, y.antecedent, lic.antecedent), m->x, y.left,
                lic.right, std::move(*ext), lic.stack, Term::app(lic.semantics, Term::abs(var, y.semantics)),
                {&y, &lic});
  }

  MaybeItem ruleWithdraw(RuleContext& ctx, ChartItem const& y, Formula const& goal) {
    auto shape = withdrawnShape(goal);
    if (!shape || !(y.formula == shape->first) || !y.stack.empty() || y.ext.size() != 1) return std::nullopt;
    auto const& t = *y.ext.begin();
    if (t.mode != Mode::M0 || !t.peripheral() || t.hypSite != y.right || !(t.hypFormula == shape->second))
      return std::nullopt;
    auto var = ctx.vars.name(t.licPos, t.hypFormula, Mode::M0);
    return make(ctx, rule::Withdraw, y.antecedent, goal, y.left, y.right, {}, {}, Term::abs(var, y.semantics), {&y});
  }

  MaybeItem ruleWr(RuleContext& ctx, ChartItem const& x, ChartItem const& adv) {
    if (x.right != adv.left || !adv.formula.isModifier(Mode::M1)) return std::nullopt;
    auto ext = disjointUnion(x.ext, adv.ext);
    if (!ext) return std::nullopt;
    WrapStack pushed;
    pushed.push_back(WrapEntry{adv.left, adv.right, adv.formula, adv.semantics});
    pushed.insert(pushed.end(), adv.stack.begin(), adv.stack.end());
    return make(ctx, rule::Wr, Antecedent::node(Mode::M1, x.antecedent, adv.antecedent), x.formula, x.left, adv.right,
                std::move(*ext), concat(x.stack, pushed), x.semantics, {&x, &adv});
  }

  MaybeItem ruleWpop(RuleContext& ctx, ChartItem const& it) {
    if (it.stack.empty()) return std::nullopt;
    auto const& top = it.stack.front();
    WrapStack rest(it.stack.begin() + 1, it.stack.end());
    if (top.formula.isModifier(Mode::M1) && top.formula.result() == it.formula)
      return make(ctx, rule::Wpop, it.antecedent, it.formula, it.left, it.right, it.ext, std::move(rest),
                  Term::app(top.semantics, it.semantics), {&it});
    static Formula const sAdv = Formula::bwd(atomS(), atomS(), Mode::M1);
    static Formula const vp = Formula::bwd(atomNp(), atomS());
    if (ctx.rules.popAtVP && top.formula == sAdv && it.formula == vp) {
      auto x = freshVarFor({&top.semantics, &it.semantics});
      auto sem = Term::abs(x, Term::app(top.semantics, Term::app(it.semantics, Term::var(x))));
      return make(ctx, rule::Wpop, it.antecedent, it.formula, it.left, it.right, it.ext, std::move(rest), sem, {&it});
    }
    return std::nullopt;
  }

  MaybeItem ruleProdI(RuleContext& ctx, ChartItem const& l, ChartItem const& r, Formula const& demand) {
    if (l.right != r.left || !demand.isProduct() || !(demand.left() == l.formula)) return std::nullopt;
    auto const& want = demand.right();
    bool ok = want == r.formula;
    if (!ok)
      if (auto inner = want.diaBoxBody(Mode::M0)) ok = *inner == r.formula;
    if (!ok) return std::nullopt;
    auto ext = disjointUnion(l.ext, r.ext);
    if (!ext) return std::nullopt;
    return make(ctx, rule::ProdI, Antecedent::node(demand.mode(), l.antecedent, r.antecedent), demand, l.left, r.right,
                std::move(*ext), concat(l.stack, r.stack), Term::pair(l.semantics, r.semantics), {&l, &r});
  }

  MaybeItem ruleProdC(RuleContext& ctx, ChartItem const& f, ChartItem const& p) {
    if (f.right != p.left || !f.formula.isSlash(Dir::Forward, Mode::Main)) return std::nullopt;
    if (!p.formula.isProduct() || p.formula.mode() != Mode::Main) return std::nullopt;
    if (!(p.formula.left() == f.formula.argument()) || !p.formula.right().diaBoxBody(Mode::M0)) return std::nullopt;
    auto ext = disjointUnion(f.ext, p.ext);
    if (!ext) return std::nullopt;
    auto sem = Term::pair(Term::app(f.semantics, Term::proj(1, p.semantics)), Term::proj(2, p.semantics));
    return make(ctx, rule::ProdC, Antecedent::node(Mode::Main, f.antecedent, p.antecedent),
                Formula::product(Mode::Main, f.formula.result(), p.formula.right()), f.left, p.right, std::move(*ext),
                concat(f.stack, p.stack), sem, {&f, &p});
  }

  MaybeItem ruleProdE(RuleContext& ctx, ChartItem const& p) {
    if (!p.formula.isProduct() || p.formula.mode() != Mode::Main) return std::nullopt;
    auto const& fun = p.formula.left();
    auto c = p.formula.right().diaBoxBody(Mode::M0);
    if (!c || !fun.isSlash(Dir::Forward, Mode::Main) || !(fun.argument() == *c)) return std::nullopt;
    auto sem = Term::app(Term::proj(1, p.semantics), Term::proj(2, p.semantics));
    return make(ctx, rule::ProdE, p.antecedent, fun.result(), p.left, p.right, p.ext, p.stack, sem, {&p});
  }

  MaybeItem ruleLnr(RuleContext& ctx, ChartItem const& m1, ChartItem const& m2) {
    if (m1.right != m2.left || !m1.formula.isModifier(Mode::Main) || !(m1.formula == m2.formula)) return std::nullopt;
    auto const& x = m1.formula.result();
    auto const& targets = ctx.rules.lnrTargets;
    if (std::find(targets.begin(), targets.end(), x) == targets.end()) return std::nullopt;
    auto ext = disjointUnion(m1.ext, m2.ext);
    if (!ext) return std::nullopt;
    auto y = freshVarFor({&m1.semantics, &m2.semantics});
    auto sem = Term::abs(y, Term::app(m2.semantics, Term::app(m1.semantics, Term::var(y))));
    return make(ctx, rule::Lnr, Antecedent::node(Mode::Main, m1.antecedent, m2.antecedent),
                Formula::bwd(Formula::diaBox(Mode::M0, x), x), m1.left, m2.right, std::move(*ext),
                concat(m1.stack, m2.stack), sem, {&m1, &m2});
  }

  MaybeItem ruleQSpeech(RuleContext& ctx, ChartItem const& aux, ChartItem const& vcore, ChartItem const& subj) {
    if (aux.right != vcore.left || vcore.right != subj.left || !(subj.formula == atomNp())) return std::nullopt;
    auto v = auxComplement(aux.formula, false);
    auto cv = quotedVerbCore(vcore.formula);
    if (!v || !cv || !(*v == *cv)) return std::nullopt;
    auto e1 = disjointUnion(aux.ext, vcore.ext);
    if (!e1) return std::nullopt;
    auto ext = disjointUnion(*e1, subj.ext);
    if (!ext) return std::nullopt;
    auto x = freshVarFor({&aux.semantics, &vcore.semantics, &subj.semantics});
    auto sem = Term::abs(
        x, Term::app(Term::app(aux.semantics, Term::app(vcore.semantics, Term::var(x))), subj.semantics));
    auto ant = Antecedent::node(Mode::Main, Antecedent::node(Mode::Main, aux.antecedent, vcore.antecedent),
                                subj.antecedent);
    return make(ctx, rule::QSpeech, std::move(ant), Formula::bwd(atomS(), atomS(), Mode::M1), aux.left, subj.right,
                std::move(*ext), concat(concat(aux.stack, vcore.stack), subj.stack), sem, {&aux, &vcore, &subj});
  }

  std::vector<ProductDemand> productDemands(ChartItem const& it) {
    std::vector<ProductDemand> out;
    bool leftFixed = true, rightFixed = true;
    Formula const* f = &it.formula;
    while (f->isSlash() && f->mode() == Mode::Main && (leftFixed || rightFixed)) {
      if (f->dir() == Dir::Forward) {
        if (rightFixed && f->argument().isProduct())
          out.push_back({ProductDemand::Side::Right, it.right, f->argument()});
        rightFixed = false;
      } else {
        if (leftFixed && f->argument().isProduct())
          out.push_back({ProductDemand::Side::Left, it.left, f->argument()});
        leftFixed = false;
      }
      f = &f->result();
    }
    return out;
  }

} // namespace mmcg
