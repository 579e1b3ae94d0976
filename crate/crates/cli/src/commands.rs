use zariski::lattice::{self, Basic, LatticeElt};
use zariski::localization::{
    canonical_iso, restriction_to_product, universal_property_check, CanonicalIso, IsoCase, Loc2Elem, LocElem,
    LocRing, UniversalReport,
};
use zariski::sample::Sampler;
use zariski::sheaf::{self, PairOutcome};
use zariski::structure::{self, SheafSection};
use zariski::{AnnPowerWitness, RadicalCert, Ring, RingElem};

use crate::job::*;
use crate::{CliError, Options, Outcome};

type Res = Result<Outcome, CliError>;

/// At most this many failure lines are printed per suite.
const SHOWN_FAILURES: usize = 5;

struct Ctx<'a> {
    ring: Ring,
    job: &'a Job,
    opts: &'a Options,
    command: &'a str,
    out: String,
}

impl Ctx<'_> {
    fn elem(&self, text: &str) -> Result<RingElem, CliError> {
        self.ring.parse(text).map_err(CliError::from)
    }

    fn elems(&self, texts: &[String]) -> Result<Vec<RingElem>, CliError> {
        self.ring.parse_all(texts).map_err(CliError::from)
    }

    fn lattice(&self, texts: &[String]) -> Result<LatticeElt, CliError> {
        Ok(LatticeElt::new(self.elems(texts)?))
    }

    fn section(&self, s: &Section) -> Result<LocElem, CliError> {
        Ok(LocElem::new(self.elem(&s.num)?, s.exp))
    }

    fn sections(&self, ss: &[Section]) -> Result<Vec<LocElem>, CliError> {
        ss.iter().map(|s| self.section(s)).collect()
    }

    fn payload<T: for<'de> serde::Deserialize<'de>>(&self) -> Result<T, CliError> {
        self.job.payload(self.command)
    }

    fn seed(&self) -> Option<u64> {
        self.opts.seed.or(self.job.seed)
    }

    fn require_seed(&self) -> Result<u64, CliError> {
        self.seed()
            .ok_or_else(|| CliError::Usage(format!("{} is randomized and needs a seed", self.command)))
    }

    fn samples(&self, default: usize) -> usize {
        self.opts.samples.or(self.job.samples).unwrap_or(default)
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn fmt(&self, a: &RingElem) -> String {
        self.ring.format(a)
    }

    fn list(&self, xs: &[RingElem]) -> String {
        self.ring.format_list(xs)
    }

    /// `√⟨g1, .., gn⟩`
    fn radical_of(&self, gens: &[RingElem]) -> String {
        let parts: Vec<String> = gens.iter().map(|g| self.fmt(g)).collect();
        format!("√⟨{}⟩", parts.join(", "))
    }

    fn frac(&self, a: &LocElem, den: &RingElem) -> String {
        let num = self.fmt(&a.num);
        if a.exp == 0 {
            return num;
        }
        let wrap = |s: String, chars: &[char]| if s.contains(chars) { format!("({s})") } else { s };
        let num = wrap(num, &[' ', '/']);
        let den = wrap(self.fmt(den), &[' ', '*', '/', '^', '-']);
        if a.exp == 1 {
            format!("{num}/{den}")
        } else {
            format!("{num}/{den}^{}", a.exp)
        }
    }

    fn cert_line(&mut self, cert: CertJson) {
        let json = serde_json::to_string(&cert).expect("certificates serialize");
        self.line(format!("cert {json}"));
    }

    fn radical_cert(&mut self, x: &RingElem, gens: &[RingElem], c: &RadicalCert) {
        let cert = CertJson::Radical {
            x: self.fmt(x),
            gens: gens.iter().map(|g| self.fmt(g)).collect(),
            k: c.k,
            coeffs: c.coeffs.iter().map(|g| self.fmt(g)).collect(),
        };
        self.cert_line(cert);
    }

    fn ann_cert(&mut self, f: &RingElem, x: &RingElem, w: AnnPowerWitness) {
        let cert = CertJson::AnnPower {
            f: self.fmt(f),
            x: self.fmt(x),
            k: w.k,
        };
        self.cert_line(cert);
    }

    fn done(self, code: i32) -> Res {
        Ok(Outcome { text: self.out, code })
    }

    fn verdict(mut self, ok: bool) -> Res {
        self.line(if ok { "true" } else { "false" });
        self.done(if ok { 0 } else { 1 })
    }

    /// Radical certificates for every `x` of `xs` in `√⟨gens⟩`, or the
    /// first `x` that is not there.
    fn radical_all(&self, xs: &[RingElem], gens: &[RingElem]) -> Result<Result<Vec<RadicalCert>, RingElem>, CliError> {
        let mut certs = Vec::new();
        for x in xs {
            match self.ring.radical_membership(x, gens)? {
                Some(c) => certs.push(c),
                None => return Ok(Err(x.clone())),
            }
        }
        Ok(Ok(certs))
    }
}

pub(crate) fn dispatch(command: &str, job: &Job, opts: &Options) -> Res {
    if !crate::COMMANDS.contains(&command) {
        return Err(CliError::Usage(format!("unknown command {command:?}")));
    }
    if let Some(c) = &job.command {
        if c != command {
            return Err(CliError::Usage(format!("job is for {c:?}, not {command:?}")));
        }
    }
    let ctx = Ctx {
        ring: job.ring.build()?,
        job,
        opts,
        command,
        out: String::new(),
    };
    match command {
        "normalize" => normalize(ctx),
        "lat-eq" => lat_eq(ctx),
        "lat-leq" => lat_leq(ctx),
        "join" | "meet" => join_meet(ctx),
        "support-check" => support_check(ctx),
        "cover-check" => cover_check(ctx),
        "is-basic" => is_basic(ctx),
        "loc-eq" => loc_eq(ctx),
        "restrict" => restrict(ctx),
        "glue" => glue(ctx),
        "section-eq" => section_eq(ctx),
        "top-roundtrip" => top_roundtrip(ctx),
        "lemma2-test" => iso_test(ctx),
        "sheaf-test" => sheaf_test(ctx),
        "verify-cert" => verify_cert(ctx),
        _ => unreachable!("command list checked above"),
    }
}

fn normalize(mut ctx: Ctx) -> Res {
    let p: OneList = ctx.payload()?;
    let a = ctx.lattice(&p.a)?;
    let n = lattice::normalize(&ctx.ring, &a)?;
    let shown = ctx.list(&n.gens);
    ctx.line(shown);
    if ctx.opts.verbose_certs {
        let cert = lattice::lat_eq(&ctx.ring, &a, &n)?
            .ok_or_else(|| zariski::Error::Internal("normal form changed the radical".into()))?;
        for (x, c) in a.gens.iter().zip(&cert.a_in_b) {
            ctx.radical_cert(x, &n.gens, c);
        }
        for (x, c) in n.gens.iter().zip(&cert.b_in_a) {
            ctx.radical_cert(x, &a.gens, c);
        }
    }
    ctx.done(0)
}

/// One direction of an order check; on failure, names the offender.
fn leq_direction(ctx: &Ctx, a: &[RingElem], b: &[RingElem], certs: &mut Vec<(RingElem, RadicalCert)>) -> Result<Option<String>, CliError> {
    match ctx.radical_all(a, b)? {
        Ok(cs) => {
            certs.extend(a.iter().cloned().zip(cs));
            Ok(None)
        }
        Err(x) => Ok(Some(format!("{} ∉ {}", ctx.fmt(&x), ctx.radical_of(b)))),
    }
}

fn order_check(mut ctx: Ctx, both: bool) -> Res {
    let p: TwoLists = ctx.payload()?;
    let a = ctx.elems(&p.a)?;
    let b = ctx.elems(&p.b)?;
    let mut certs = Vec::new();
    let mut failure = leq_direction(&ctx, &a, &b, &mut certs)?;
    let split = certs.len();
    if both && failure.is_none() {
        failure = leq_direction(&ctx, &b, &a, &mut certs)?;
    }
    if let Some(why) = failure {
        ctx.line(format!("false: {why}"));
        return ctx.done(1);
    }
    ctx.line("true");
    for (i, (x, c)) in certs.iter().enumerate() {
        let gens = if i < split { &b } else { &a };
        ctx.radical_cert(x, gens, c);
    }
    ctx.done(0)
}

fn lat_eq(ctx: Ctx) -> Res {
    order_check(ctx, true)
}

fn lat_leq(ctx: Ctx) -> Res {
    order_check(ctx, false)
}

fn join_meet(mut ctx: Ctx) -> Res {
    let p: TwoLists = ctx.payload()?;
    let a = ctx.lattice(&p.a)?;
    let b = ctx.lattice(&p.b)?;
    let r = if ctx.command == "join" {
        lattice::join(&a, &b)
    } else {
        lattice::meet(&ctx.ring, &a, &b)
    };
    let shown = ctx.list(&r.gens);
    ctx.line(shown);
    ctx.done(0)
}

fn support_check(mut ctx: Ctx) -> Res {
    let p: SupportPayload = ctx.payload()?;
    let mut pairs = Vec::new();
    for [f, g] in &p.pairs {
        pairs.push((ctx.elem(f)?, ctx.elem(g)?));
    }
    match ctx.seed() {
        Some(seed) => {
            let mut s = Sampler::new(seed);
            for _ in 0..ctx.samples(100) {
                pairs.push((s.elem(&ctx.ring), s.elem(&ctx.ring)));
            }
        }
        None if pairs.is_empty() => {
            return Err(CliError::Usage("support-check needs pairs or a seed".into()));
        }
        None => {}
    }
    let report = lattice::support_check(&ctx.ring, &pairs)?;
    for fail in report.failures.iter().take(SHOWN_FAILURES) {
        let at = match fail.pair {
            Some(i) => format!(" at ({}, {})", ctx.fmt(&pairs[i].0), ctx.fmt(&pairs[i].1)),
            None => String::new(),
        };
        ctx.line(format!("violated: {}{at}", fail.relation));
    }
    let status = if report.passed() { "pass" } else { "fail" };
    ctx.line(format!(
        "{status}: {} pairs, {} checks, {} failures",
        pairs.len(),
        report.checks,
        report.failures.len()
    ));
    ctx.done(if report.passed() { 0 } else { 1 })
}

fn cover_check(mut ctx: Ctx) -> Res {
    let p: CoverPayload = ctx.payload()?;
    let target = ctx.lattice(&p.target)?;
    let parts = ctx.elems(&p.parts)?;
    match sheaf::cover_check(&ctx.ring, &target, &parts)? {
        Some(cover) => {
            ctx.line("true");
            for (f, c) in parts.iter().zip(cover.cert_down()) {
                ctx.radical_cert(f, &target.gens, c);
            }
            for (t, c) in target.gens.iter().zip(cover.cert_up()) {
                ctx.radical_cert(t, &parts, c);
            }
            ctx.done(0)
        }
        None => {
            let mut certs = Vec::new();
            let why = match leq_direction(&ctx, &parts, &target.gens, &mut certs)? {
                Some(w) => w,
                None => leq_direction(&ctx, &target.gens, &parts, &mut certs)?
                    .unwrap_or_else(|| "certificates disagree".into()),
            };
            ctx.line(format!("false: {why}"));
            ctx.done(1)
        }
    }
}

fn is_basic(mut ctx: Ctx) -> Res {
    let p: OneList = ctx.payload()?;
    let a = ctx.lattice(&p.a)?;
    match lattice::is_basic_open(&ctx.ring, &a)? {
        Basic::Yes(f) => {
            let shown = ctx.fmt(&f);
            ctx.line(format!("yes: D({shown})"));
            if ctx.opts.verbose_certs {
                let cert = lattice::lat_eq(&ctx.ring, &lattice::d_of(&f), &a)?
                    .ok_or_else(|| zariski::Error::Internal("basic open presentation fails".into()))?;
                ctx.radical_cert(&f, &a.gens, &cert.a_in_b[0]);
                for (x, c) in a.gens.iter().zip(&cert.b_in_a) {
                    ctx.radical_cert(x, std::slice::from_ref(&f), c);
                }
            }
            ctx.done(0)
        }
        Basic::Unknown => {
            ctx.line("unknown");
            ctx.done(1)
        }
    }
}

fn loc_eq(mut ctx: Ctx) -> Res {
    let p: LocEqPayload = ctx.payload()?;
    let den = ctx.elem(&p.den)?;
    let a = ctx.section(&p.a)?;
    let b = ctx.section(&p.b)?;
    let loc = LocRing::new(&ctx.ring, den.clone());
    match loc.eq_witness(&a, &b) {
        Some(w) => {
            ctx.line(format!("true (k={})", w.k));
            let diff = loc.cross_diff(&a, &b);
            ctx.ann_cert(&den, &diff, w);
            ctx.done(0)
        }
        None => ctx.verdict(false),
    }
}

fn restrict(mut ctx: Ctx) -> Res {
    let p: RestrictPayload = ctx.payload()?;
    let f = ctx.elem(&p.from)?;
    let g = ctx.elem(&p.to)?;
    let s = ctx.section(&p.section)?;
    let Some(cert) = ctx.ring.radical_membership(&g, std::slice::from_ref(&f))? else {
        let why = format!("{} ∉ {}", ctx.fmt(&g), ctx.radical_of(std::slice::from_ref(&f)));
        ctx.line(format!("false: {why}"));
        return ctx.done(1);
    };
    let r = structure::restrict_basic(&ctx.ring, &s, &f, &g)?;
    let shown = ctx.frac(&r, &g);
    ctx.line(shown);
    if ctx.opts.verbose_certs {
        ctx.radical_cert(&g, &[f], &cert);
    }
    ctx.done(0)
}

fn glue(mut ctx: Ctx) -> Res {
    let p: GluePayload = ctx.payload()?;
    let h = ctx.elem(&p.h)?;
    let parts = ctx.elems(&p.parts)?;
    let secs = ctx.sections(&p.sections)?;
    if secs.len() != parts.len() {
        return Err(CliError::Usage(format!("{} sections for {} parts", secs.len(), parts.len())));
    }
    let Some(cover) = sheaf::basic_cover(&ctx.ring, &h, &parts)? else {
        let mut certs = Vec::new();
        let target = [h.clone()];
        let why = match leq_direction(&ctx, &parts, &target, &mut certs)? {
            Some(w) => w,
            None => leq_direction(&ctx, &target, &parts, &mut certs)?.unwrap_or_default(),
        };
        ctx.line(format!("false: not a cover: {why}"));
        return ctx.done(1);
    };
    let Some(family) = sheaf::check_compatible(&ctx.ring, &cover, &secs)? else {
        let (i, j) = first_disagreement(&ctx.ring, &parts, &secs);
        ctx.line(format!("false: sections {} and {} disagree on the overlap", i + 1, j + 1));
        return ctx.done(1);
    };
    let glued = structure::glue(&ctx.ring, &h, &family)?;
    let shown = ctx.frac(&glued.value, &h);
    ctx.line(shown);
    if ctx.opts.verbose_certs {
        let t = &glued.trace;
        let e = ctx.list(&t.e);
        let tilde = ctx.list(&t.tilde);
        ctx.line(format!("trace d={} N={} D={} t={} e={e} a~={tilde}", t.d, t.n, t.big_d, t.t));
        let powered: Vec<RingElem> = parts.iter().map(|f| ctx.ring.pow(f, t.big_d)).collect();
        let cert = RadicalCert {
            k: t.t,
            coeffs: t.e.clone(),
        };
        ctx.radical_cert(&h, &powered, &cert);
        for &((i, j), w) in family.agreements() {
            let loc = LocRing::new(&ctx.ring, ctx.ring.mul(&parts[i], &parts[j]));
            let a = restriction_to_product(&ctx.ring, &parts[i], &parts[j]).apply(&secs[i]);
            let b = restriction_to_product(&ctx.ring, &parts[j], &parts[i]).apply(&secs[j]);
            let diff = loc.cross_diff(&a, &b);
            ctx.ann_cert(loc.den(), &diff, w);
        }
    }
    ctx.done(0)
}

fn first_disagreement(ring: &Ring, parts: &[RingElem], secs: &[LocElem]) -> (usize, usize) {
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let loc = LocRing::new(ring, ring.mul(&parts[i], &parts[j]));
            let a = restriction_to_product(ring, &parts[i], &parts[j]).apply(&secs[i]);
            let b = restriction_to_product(ring, &parts[j], &parts[i]).apply(&secs[j]);
            if !loc.eq(&a, &b) {
                return (i, j);
            }
        }
    }
    (0, 0)
}

fn section_eq(ctx: Ctx) -> Res {
    let p: SectionEqPayload = ctx.payload()?;
    let over = ctx.lattice(&p.over)?;
    let build = |pr: &Presented| -> Result<SheafSection, CliError> {
        let parts = ctx.elems(&pr.parts)?;
        let secs = ctx.sections(&pr.sections)?;
        Ok(SheafSection::new(&ctx.ring, &over, &parts, &secs)?)
    };
    let s = build(&p.s)?;
    let t = build(&p.t)?;
    let eq = structure::section_eq(&ctx.ring, &s, &t)?;
    ctx.verdict(eq)
}

fn top_roundtrip(mut ctx: Ctx) -> Res {
    let p: TopPayload = ctx.payload()?;
    let parts = ctx.elems(&p.parts)?;
    let mut elems = ctx.elems(&p.elements)?;
    match ctx.seed() {
        Some(seed) => {
            let mut s = Sampler::new(seed);
            for _ in 0..ctx.samples(100) {
                elems.push(s.elem(&ctx.ring));
            }
        }
        None if elems.is_empty() => {
            return Err(CliError::Usage("top-roundtrip needs elements or a seed".into()));
        }
        None => {}
    }
    let report = structure::top_roundtrip(&ctx.ring, &parts, &elems)?;
    for (i, why) in report.failures.iter().take(SHOWN_FAILURES) {
        let shown = ctx.fmt(&elems[*i]);
        ctx.line(format!("failed on {shown}: {why}"));
    }
    let status = if report.passed() { "pass" } else { "fail" };
    ctx.line(format!(
        "{status}: {} elements round-tripped over {}, {} failures",
        report.samples,
        ctx.list(&parts),
        report.failures.len()
    ));
    ctx.done(if report.passed() { 0 } else { 1 })
}

fn print_universal(ctx: &mut Ctx, report: &UniversalReport) {
    for o in report.failures().take(SHOWN_FAILURES) {
        let at = o.sample.map(|i| format!(" on sample {}", i + 1)).unwrap_or_default();
        ctx.line(format!("clause {} failed{at}: {}", o.clause, o.detail));
    }
    let status = if report.passed() { "pass" } else { "fail" };
    ctx.line(format!("universal property: {status} ({} checks)", report.outcomes.len()));
}

fn iso_test(mut ctx: Ctx) -> Res {
    let p: IsoPayload = ctx.payload()?;
    let seed = ctx.require_seed()?;
    let n = ctx.samples(100);
    let case = match p.case.as_str() {
        "iterated" => IsoCase::Iterated,
        "unit" => IsoCase::Unit,
        "mutual" => IsoCase::Mutual,
        other => return Err(CliError::Usage(format!("unknown case {other:?}"))),
    };
    let f = ctx.elem(&p.f)?;
    let g = p.g.as_deref().map(|g| ctx.elem(g)).transpose()?;
    let ring = ctx.ring.clone();
    let iso = canonical_iso(&ring, case, &f, g.as_ref())?;
    let mut s = Sampler::new(seed);
    let report = iso.sample_check(&mut s, n);
    for why in report.failures.iter().take(SHOWN_FAILURES) {
        ctx.line(format!("failed: {why}"));
    }
    let status = if report.passed() { "pass" } else { "fail" };
    ctx.line(format!("isomorphism: {status} ({} checks, {} failures)", report.checks, report.failures.len()));

    let loc = |s: &mut Sampler| -> Vec<LocElem> {
        (0..n).map(|_| LocElem::new(s.elem(&ring), s.exp(3))).collect()
    };
    let universal = match &iso {
        CanonicalIso::Iterated(i) => {
            let singles = loc(&mut s);
            let doubles: Vec<Loc2Elem> = (0..n)
                .map(|_| Loc2Elem::new(s.elem(&ring), s.exp(3), s.exp(3)))
                .collect();
            universal_property_check(&i.single, &i.double, |a| i.backward(a), &singles, &doubles)?
        }
        CanonicalIso::Unit(i) => {
            let locs = loc(&mut s);
            let bases: Vec<LocElem> = (0..n).map(|_| i.base.from_base(&s.elem(&ring))).collect();
            universal_property_check(&i.loc, &i.base, |a| i.forward(a), &locs, &bases)?
        }
        CanonicalIso::Mutual(i) => {
            let fs = loc(&mut s);
            let gs = loc(&mut s);
            universal_property_check(i.forward.source(), i.forward.target(), |a| i.forward.apply(a), &fs, &gs)?
        }
    };
    print_universal(&mut ctx, &universal);
    let ok = report.passed() && universal.passed();
    ctx.done(if ok { 0 } else { 1 })
}

fn sheaf_test(mut ctx: Ctx) -> Res {
    let p: SheafPayload = ctx.payload()?;
    let seed = ctx.require_seed()?;
    let n = ctx.samples(50);
    let (h, f, g) = (ctx.elem(&p.h)?, ctx.elem(&p.f)?, ctx.elem(&p.g)?);
    let mut s = Sampler::new(seed);
    let (good, bad) = sheaf::sample_pullback_pairs(&ctx.ring, &f, &g, &h, &mut s, n)?;
    let good_report = sheaf::pullback_instance_check(&ctx.ring, &f, &g, &h, &good)?;
    let bad_report = sheaf::pullback_instance_check(&ctx.ring, &f, &g, &h, &bad)?;
    let mut ok = good_report.passed() && bad_report.passed();
    for o in good_report.outcomes.iter().chain(&bad_report.outcomes) {
        if let PairOutcome::Failed(why) = o {
            ctx.line(format!("failed: {why}"));
        }
    }
    ok &= good_report.glued() == good.len() && bad_report.rejected() == bad.len();
    ctx.line(format!("compatible pairs glued: {} of {}", good_report.glued(), good.len()));
    ctx.line(format!("incompatible pairs rejected: {} of {}", bad_report.rejected(), bad.len()));
    ctx.line(format!("terminal R[1/0]: {}", if good_report.terminal { "ok" } else { "fail" }));
    ctx.line(if ok { "pass" } else { "fail" });
    ctx.done(if ok { 0 } else { 1 })
}

fn verify_cert(mut ctx: Ctx) -> Res {
    let p: VerifyPayload = ctx.payload()?;
    let mut ok_count = 0;
    for (i, cert) in p.certs.iter().enumerate() {
        let (kind, ok) = match cert {
            CertJson::Radical { x, gens, k, coeffs } => {
                let c = RadicalCert {
                    k: *k,
                    coeffs: ctx.elems(coeffs)?,
                };
                ("radical", c.verify(&ctx.ring, &ctx.elem(x)?, &ctx.elems(gens)?))
            }
            CertJson::Combination { x, gens, coeffs } => {
                let ok = coeffs.len() == gens.len()
                    && ctx.ring.combine(&ctx.elems(coeffs)?, &ctx.elems(gens)?) == ctx.elem(x)?;
                ("combination", ok)
            }
            CertJson::AnnPower { f, x, k } => {
                let w = AnnPowerWitness { k: *k };
                ("ann-power", w.verify(&ctx.ring, &ctx.elem(f)?, &ctx.elem(x)?))
            }
        };
        ok_count += usize::from(ok);
        ctx.line(format!("{} {kind} {}", if ok { "ok" } else { "FAILED" }, i + 1));
    }
    let all = ok_count == p.certs.len();
    ctx.line(format!("verified {ok_count} of {}", p.certs.len()));
    ctx.done(if all { 0 } else { 1 })
}
