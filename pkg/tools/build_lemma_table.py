#!/usr/bin/env python3
"""Generate src/agrisk/data/lemmas.tsv.

The table is produced from three authored sources:

1. Base vocabularies (verbs, nouns, adjectives) expanded with regular
   English inflection rules. A trailing '*' on a verb marks final-consonant
   doubling ("stop*" -> stopping, stopped).
2. Irregular verb and noun paradigms listed explicitly.
3. Identity guards: for every lemma the suffix fallback rules would mangle
   (e.g. "seed" -> "se" under the -ed rule), an explicit lemma->lemma row.

Output rows are "inflected<TAB>lemma", sorted by inflected form. Running
the script twice produces byte-identical output.
"""

from __future__ import annotations

import sys
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "agrisk" / "data" / "lemmas.tsv"

VOWELS = set("aeiou")


def plural(noun: str) -> str:
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in VOWELS:
        return noun[:-1] + "ies"
    if noun.endswith("o") and noun[-2:] not in ("oo", "eo", "io"):
        return noun + "es"
    return noun + "s"


def verb_s(verb: str) -> str:
    return plural(verb)


def verb_ing(verb: str, double: bool) -> str:
    if double:
        return verb + verb[-1] + "ing"
    if verb.endswith("ie"):
        return verb[:-2] + "ying"
    if verb.endswith("e") and not verb.endswith(("ee", "oe", "ye")):
        return verb[:-1] + "ing"
    return verb + "ing"


def verb_ed(verb: str, double: bool) -> str:
    if double:
        return verb + verb[-1] + "ed"
    if verb.endswith("e"):
        return verb + "d"
    if verb.endswith("y") and len(verb) > 1 and verb[-2] not in VOWELS:
        return verb[:-1] + "ied"
    return verb + "ed"


def comparative(adj: str) -> str:
    if adj.endswith("e"):
        return adj + "r"
    if adj.endswith("y") and len(adj) > 1 and adj[-2] not in VOWELS:
        return adj[:-1] + "ier"
    return adj + "er"


def superlative(adj: str) -> str:
    if adj.endswith("e"):
        return adj + "st"
    if adj.endswith("y") and len(adj) > 1 and adj[-2] not in VOWELS:
        return adj[:-1] + "iest"
    return adj + "est"


def fallback_lemma(token: str, known_lemmas: frozenset[str]) -> str:
    """Mirror of agrisk.preprocess._fallback_lemma, used to compute guards."""
    if token.endswith("ies") and len(token) > 3:
        return token[:-3] + "y"
    if token.endswith("es") and len(token) - 2 >= 3:
        return token[:-2]
    if token.endswith("s") and not token.endswith("ss") and len(token) > 1:
        return token[:-1]
    if token.endswith("ing") and len(token) > 3:
        stem = token[:-3]
        if stem + "e" in known_lemmas and stem not in known_lemmas:
            return stem + "e"
        return stem
    if token.endswith("ed") and len(token) > 2:
        return token[:-2]
    return token


# Regular verbs. '*' doubles the final consonant before -ing/-ed.
VERBS = """
abandon absorb accelerate accept access accompany accomplish account accumulate
accuse achieve acknowledge acquire act adapt add address adjust administer admit*
adopt advance advise advocate affect afford agree aid aim alert align allege
allocate allow alter amend analyze announce anticipate appeal appear apply
appoint appreciate approach approve argue arise arrange arrest arrive ask
assemble assert assess assign assist assume assure attach attack attempt attend
attract audit authorize avoid award back balance ban* bargain base battle bear
behave believe belong benefit bet* bid blame block bloom boast boil bolster
boost border borrow bother bounce brand breed brief broadcast broaden browse
budget burden bury calculate call calm campaign cancel capture care carry cause
caution cease celebrate center certify challenge change charge chase cheat check
cheer churn circulate cite claim clarify classify clean clear climb close
collaborate collapse collect combat combine comment commission commit*
communicate compare compensate compete compile complain complete comply compound
compromise compute conclude condemn conduct confirm confront connect conserve
consider consist consolidate constitute constrain construct consult consume
contact contain contaminate continue contract contribute control convene convert
convey convince cook cool cooperate coordinate cope correct cost counter
count cover crash create criticize crop* cross cultivate curb cure cut damage
dance debate decide declare decline decrease dedicate deem deepen default defend
defer define deflate degrade delay delegate deliver demand demonstrate deny
depend deplete deploy deposit depress derive describe deserve design designate
destroy detail detect deteriorate determine devastate develop devote diagnose
dictate differ dig* diminish dip* direct disagree disappear disburse disclose
discount discourage discover discuss dismiss displace display dispute disrupt
dissolve distribute divert divide document dominate donate double doubt drain
dread drift drill drop* dry dump earn ease echo edge educate elect elevate
eliminate embrace emerge emphasize employ empower enable enact encounter
encourage end endanger endorse endure enforce engage enhance enjoy enrich enroll
ensure enter entitle equip* erode erupt escalate escape establish estimate
evacuate evaluate evolve examine exceed exchange exclude execute exercise exert
exhaust exist expand expect expel* experience expire explain exploit explore
export expose express extend extract face facilitate fail farm fashion favor
fear feature fence fertilize file fill finance fine finish fix flood flourish
flow fluctuate focus fold follow force forecast form formulate foster fuel
fulfill function fund gain gather gauge generate govern grab* grade graduate
grant graze guarantee guard guess guide halt hamper hand handle happen harm
harvest hatch haul head heal heat hedge help hesitate highlight hinder hire
hoard hold honor hope host house hover hurry identify ignite ignore illustrate
imagine impact implement imply import impose improve inch include incorporate
increase incur* indicate infect inflate influence inform inject injure innovate
insist inspect inspire install insulate insure integrate intend intensify
interact intervene interview introduce invest investigate invite involve
irrigate isolate issue jeopardize join judge jump justify kill knock label
lack land last launch layer lead leak lean lease leave lend level liberalize
license lift limit link list live load loan lobby locate lock look loom lower
maintain manage mandate manufacture map* margin mark market match matter mature
measure mechanize mediate mention merge migrate mill mine mitigate mix mobilize
model moderate modernize modify monitor mount move mull multiply name narrate
narrow navigate need neglect negotiate nominate note notice notify nurture
obligate
observe obtain occupy occur* offer offset open operate oppose order organize
outline outpace outperform overhaul oversee overwhelm owe own pack package
paint participate partner pass pause pay peak penalize perform permit* persist
persuade phase pick picture pile pilot pinpoint place plague plan* plant play
pledge plow plummet plunge point pollute pose position possess post postpone
pour power practice praise predict prefer* prepare present preserve press
pressure prevail prevent price print prioritize privatize probe process procure
produce profit progress prohibit project promise promote prompt propose
prosecute prosper protect protest prove provide provoke publish pull pump
purchase push qualify quantify question quote rain raise rally ramp range rank
rate ratify ration reach react readjust realize reap reassure rebound rebuild
recall receive recommend reconsider record recount recover recruit rectify
redistribute reduce refer* refine reflect reform refrain refuse regain register
regret* regulate rehabilitate reinforce reiterate reject relate relax release
relieve rely remain remark remedy remember remind remove renew rent reopen
repair repay repeat replace replant report represent request require research
reserve reshape resign resist resolve respond restore restrict restructure
result resume retain retire retreat return reveal reverse review revise revive
revoke reward ripen rise risk roll rot* rotate route rule run rush sabotage
sack safeguard sample sanction satisfy save scale scan* scatter schedule score
scramble screen seal search season secure seek seize select sell serve service
settle shape share sharpen shelter shift ship* shock shore shorten shoulder
show shrink shut* sign signal simplify site situate skip* slash slaughter slide
slip* slow smooth soar solve sort sound source sow span* spare spark specialize
specify speculate speed spell spend spike spoil sponsor spray spread sprout
spur* stabilize stack staff stage stagnate stall stamp stand standardize start
starve state station stay stem* step* sterilize stimulate stipulate stock
stockpile stop* store storm strain strand streamline strengthen stress stretch
strip* struggle study subject submit* subsidize substitute succeed suffer
suggest suit supervise supplement supply support suppress surge surpass
surrender surround survey survive suspect suspend sustain swell tackle tailor
talk tally tap* target tax team tear temper tend term test testify thank
threaten thrive tie tighten till tilt time tip* tolerate top* total touch tour
trace track trade trail train transfer* transform translate transmit* transport
travel treat trend trigger trim* trouble truck trust try turn underline
undermine underpin underscore unfold unify unite unveil update upgrade uphold
urge use utilize vaccinate validate value vary vent venture verify vet* view
visit voice vote vow wait waive walk want warm warn wash waste watch water
weaken weather weigh welcome wheel widen wilt win* wind wipe wish wither witness
wonder work worry worsen wrap*
accelerate accommodate ache admire advertise agitate ail amass amplify anchor
anger annoy answer apologize applaud appraise arm arrive articulate aspire
assail astonish attribute avert awaken bake bank bark bathe beg* behold belt
bend blend blink blossom blur* board bomb book boom bottle box brace
brake breach breathe bribe bridge brighten broker bruise brush buckle bud*
buffer bundle burn bust buzz cage calibrate camp cap* caption carve cash cast
catalog categorize cater caution chain chair chant chap* chart chat* chill
chip* choke chop* chronicle circle clash clasp claw click cling clip* clog*
coach coat coax code coin collide color comb comfort command commend commute
conceal concede conceive concentrate concern condition cone confer* confess
confide configure confine confiscate conform confuse congratulate conjure
connote conquer consent console conspire contemplate contend contest continue
contort contrast convict copy cork correlate corrode corrupt cough counsel
court cradle cram* crave crawl credit creep cripple critique crouch crowd
crown cruise crumble crunch crush cry cue cup* curl curse curtail curve
cushion dab* dam* dampen dare darken dart dash date dazzle deafen debit decay
deceive decipher deck decode decorate decree deduce deduct deem defeat defect
deflect defraud defy degenerate delete deliberate delight delineate demean
demolish demote denote denounce dent depart depict deprive derail descend
desert deserve designate despair despise detach detain deter* detest
dethrone detonate devalue deviate devise devour dice dictate differentiate
diffuse digest dignify dilute dine disarm disband discard discern discharge
discipline disconnect dishonor disintegrate dislike dislodge dismantle
dismay disobey disown dispatch dispel* dispense disperse displease dispose
disprove disqualify disregard dissent dissuade distill distinguish distort
distract distress disturb ditch dive divest divulge dock dodge dole doll
dot* downplay downsize doze draft drag* drape dream drench dress dribble
drown drug* dwell dye earmark eclipse edit egg elaborate elapse elicit elude
email embark embed* embezzle embody emit* empathize emulate enchant encircle
enclose encode encrypt endear energize engineer engrave engulf enlarge
enlighten enlist enliven enrage ensue entail entangle entertain enthuse
entice entrench entrust envision envy equate equalize eradicate erase err
espouse esteem etch evade evaporate evict evoke exacerbate exaggerate exalt
excavate excel* exclaim excuse exemplify exhale exhibit exhilarate exile
exonerate expedite experiment explode expound expunge extinguish extol*
extort extrapolate exude eye fabricate fade falter familiarize fan* fancy
fare fast fathom fatten fault fax feast feign ferry fester fetch fiddle
fidget field fight filter finalize fish fit* flag* flare flash flatten
flatter flaunt flavor flex flick flinch fling flip* flirt float flock flog*
flop* floss flout flush flutter foam fog* foil fool forage forfeit forge
fork fortify forward foul fracture frame freshen frighten frown frustrate
fry fumble fume fuse fuss gamble garner gasp gaze gear generalize gesture
giggle glance glare gleam glean glide glimpse glow glue gnaw gobble goof
gossip gouge grapple grasp grate greet grieve grill grimace grin* grip*
gripe groan groom grope gross grouse grumble grunt gush gut* gyrate hail
hallow hammer harass harbor harden harness hasten hate haunt heave heed hem*
herald hike hinge hiss hitch hobble hone honk hoot hop* horrify hose hound
howl huddle hug* hum* humble humiliate hunt hurl hush hustle hype idle
idolize illuminate immerse immunize impair impart impede imperil implant
implicate implode implore incapacitate incense incite incline indict induce
indulge infer* infest infiltrate inflame inflict infringe infuse inhabit
inhale inherit inhibit initiate insert insinuate instigate instill instruct
insult intercept interfere interject interpret interrogate interrupt
intimidate intrigue inundate invade invalidate invent invert invoke irk
iron irritate itch jab* jam* jar* jeer jest jingle jog* jolt jostle jot*
juggle jumble keel key kick kid* kindle kiss knead kneel knit* knot* labor
lag* lament laminate lash lasso latch lather laugh launder lavish leap
lecture leer legislate lessen liken limp linger liquidate listen litigate
litter loathe lodge log* loiter long lounge love lull lumber lunge lurch
lure lurk magnify mail maim malign mangle manipulate march marvel mash mask
massage master materialize maximize meander meddle meditate mellow melt
memorize menace mend mentor meow mesh mess mimic mince mingle minimize
misbehave miscalculate misinterpret mislead mispronounce miss mistreat
misuse moan mock mold molest mop* moralize motion motivate mourn mow muddle
muffle mug* mumble munch murder murmur muse muster mute mutilate mutter
muzzle nab* nag* nail nap* nauseate nestle nibble nick nickname nod* nominate
nosedive notch nourish nudge nullify numb obey object oblige obscure obsess
obstruct offend ogle ooze orbit orchestrate ordain orient originate
ostracize oust outbid* outdo outgrow outlast outlaw outnumber outrage outrun*
outsell outshine outsmart outweigh overcome overdo overestimate overflow
overhear overheat overlap* overload overlook overpay overpower overreact
override overrule overrun* overstate overstep* overtake overthrow overturn
overuse overvalue overwork pacify pad* page pamper pan* panic parade
paralyze paraphrase pardon pare park parrot part partition patch patrol
patronize pat* pave paw pawn peck pedal peddle peek peel peer pelt pen*
pepper perceive perch perfect perish perjure perk permeate perpetuate
perplex persecute personalize personify perspire pertain perturb peruse
pervade pester pet* petition photograph phrase pickle piece pierce pinch
pine pin* pioneer pipe pique pitch pity pivot placate plagiarize plaster
plead please pluck plug* plot* pocket poach poise poke polarize police
polish poll ponder pop* popularize populate portray pound pout preach
precede preclude predetermine predispose preempt prejudge premiere preoccupy
prescribe presume pretend prick pride prime privilege prize proclaim prod*
profess proliferate prolong pronounce proofread prop* propel* prophesy
proportion proposition prostrate prowl prune pry publicize pucker puncture
punish purge purify purr pursue quadruple quake quell quench query quibble
quicken quiet quiver quiz* race rack radiate raid rake ransack rant rap*
rape rasp rattle ravage rave ravish raze readmit* reaffirm realign reappear
rear rearrange reason reassemble reassess rebel* rebuff rebuke rebut*
recapture recede recharge recite reckon reclaim recline recoil recollect
reconcile recondition reconstruct recreate recur* recycle redeem redirect
rediscover redo redouble redress reek reel reenact refill refresh refund
refurbish regress rehash rehearse reign reimburse rein reinstate reinvent
rejoice rejoin rekindle relapse relay relegate relent relinquish relish
relive reload relocate remarry reminisce remit* remodel remunerate rename
render rendezvous renounce renovate repeal repel* repent rephrase replenish
replicate repossess reprimand reproach reproduce repudiate repulse reroute
resemble resent reside resonate respect restate resurface resurrect
retaliate rethink retool retort retrace retract retrieve reunite revamp
revel reverberate revere revert revitalize revolt revolve rhyme rid* ridicule
rifle rig* rinse riot rip* ripple rival rivet roam roar roast rob* rock
romp roost root rope rouse rout rove rub* ruffle ruin rumble rummage rupture
rust rustle saddle sag* sail salute salvage sanctify sand sap* sate saturate
saunter savor scald scalp scamper scar* scare scavenge scent scoff scold
scoop scoot scorch scorn scour scout scowl scrap* scrape scratch scrawl
scream screech scribble scrub* scrutinize scuffle sculpt scurry seat secede
seclude second seduce seep seethe segregate sense sentence sequester
serenade sever sew shackle shade shadow shame shampoo shatter shave shear
sheathe shell shepherd shield shimmer shiver shove shovel showcase shred*
shriek shrivel shrug* shudder shuffle shun* shuttle sidestep* sidetrack
sift sigh signify silence simmer simulate sin* sip* siphon sizzle sketch
skid* skim* skirt skyrocket slack slam* slant slap* slay sled* slice slick
slight sling slink slit* slither slobber slog* slump slur* smack smash
smear smell smile smirk smother smuggle snag* snap* snarl snatch sneak
sneer sneeze snicker sniff snip* snoop snooze snore snort snub* snuff
snuggle soak sob* sober socialize sock soften soil solicit solidify soothe
sparkle spawn spearhead spew spill spin splash splurge spoon spot* spout
sprain sprawl sprinkle sprint squabble squander square squash squat* squeak
squeal squeeze squint squirm squirt stab* stagger stain stake stalk stammer
stampede staple stare startle stash steer stifle stink stir* stitch stoke
stomp stoop strangle strap* stray strew stride stroke stroll strut* stub*
stumble stump stun* stutter style subdue subjugate sublet* submerge
subordinate subscribe subside subsist substantiate subtract subvert sue
sulk summon surmise surmount sour swallow swamp swap* swat* sway swerve
swindle swipe swirl swoop tabulate tag* taint tame tamper tan* tangle
tantalize taper tarnish taste taunt tease teem telephone televise tempt
terminate terrify terrorize theorize thaw thicken thrash thread thresh
thrill throb* throttle thrust thud* thump thwart tick tickle tiptoe tire
toast toil tolerate toot topple torment torture toss tout tow traipse
trample transcend transcribe transplant trap* traverse tread treasure
trek* tremble trespass trick trickle trip* triple triumph trot* trounce
truncate tuck tug* tumble tune tunnel turbocharge tutor twinkle twirl twist
twitch type unbuckle uncover undercut* underestimate undergird underlie
undermine underpay underrate understate undertake undervalue undo undress
unearth unfasten unhinge unify unlearn unleash unload unlock unmask unnerve
unplug* unravel unseat unsettle untangle untie upend uproot upset* upstage
usher usurp utter vacate vacation vanish vanquish vault veer venerate vent
verbalize vibrate vilify vindicate violate visualize vocalize volunteer
vouch voyage waddle wade wag* wager wail waver wed* weed whack
wheeze whimper whine whip* whirl whisk whisper whistle wield wiggle wilt
wince wink wire wiretap* wobble woo worship wrangle wreck wrestle
wriggle wrinkle yank yearn yell yelp zap* zigzag* zip* zoom
""".split()

# Regular nouns (plural -> singular rows only).
NOUNS = """
acre activist administration advisor agency agenda agreement agriculture
agronomist aid airport allocation amount analysis analyst animal announcement
applicant application appraisal approach aquifer area arrangement article
assembly assessment asset association auction audit authority award bag
bailout balance bank banker barge barley barrel barrier basin basket battle
bean beet beneficiary benefit bid bill billion biologist blight board bond
bonus border borrower boundary breeder broker brigade budget buffalo bulletin
bureau bushel business buyer bylaw cabinet calf camp campaign canal candidate
capacity capital cargo carrier cart case cassava category ceiling
census center cereal ceremony certificate chain chairman challenge chamber
channel characteristic charge chart charter chemical chicken child cistern
citizen city claim climate clinic close cluster coalition cocoa coffee collapse
colleague collection college commission commissioner committee commodity
community company compensation competition competitor complaint component
concern concession condition conference conflict congress consensus consequence
conservation consortium constituency constraint consultant consumer consumption
container context contract contractor contribution control controversy
convention cooperative corn corporation corridor cost cotton council counselor
country county coupon court cow creditor crisis criterion critic crop cross
crowd cultivation culture currency curriculum customer cyclone dairy dam damage
database deadline deal dealer debate debt decade decision decline decree
deficit degree delegate delegation delivery demand demonstration department
depositor depot depression deputy desert design destination detail developer
development diagnosis dialogue diesel diet difference dimension director
disaster discount discovery discussion disease dispute distribution district
dividend doctor document dollar domain donation donor dose draft drain drought
economist economy ecosystem editor education effect effort election elevator
embargo emergency emission employee employer employment energy engineer
engineering enterprise entity entrepreneur environment epidemic equipment
erosion estate estimate evaluation event evidence examination example exception
exchange executive exemption expansion expenditure expense experiment expert
export exporter exposure extension facility factor factory faculty failure fall
family farm farmer farmland farmstead feature fee feed fertility fertilizer
festival fiber field figure finance firm fishery flood floor flour flow fodder
food force forecast forecaster forest forum foundation framework franchise
fraud freight frontier fruit fuel fumigation function fund fungicide fungus
future gain gap garden gas gasoline generation goat governance
government governor grade grain grant grape grass greenhouse grid grocer group
grower growth guarantee guard guideline habitat hacienda hand handler harbor
hardship harvest hazard headline headquarter health hearing hectare herbicide
herd heritage highway hog holder holding homestead horizon hormone horticulture
hospital hour house household hub hybrid hydrologist idea impact implement
import importer incentive incident income increase index indicator industry
infection inflation infrastructure ingredient initiative innovation input
insect insecticide inspection inspector installment institute institution
instruction instrument insurance insurer interest intermediary intervention
interview invention inventory investigation investment investor invoice
irrigation island issue item job joint journal journalist judge jurisdiction
kilogram kilometer labor laboratory laborer lake landholder landowner landscape
law lawmaker lawsuit lawyer layer leader leadership league ledger legislation
legislature lender lentil lesson letter level levy liability license
lifeline limit line linkage list livelihood livestock loan lobby locality
location locust loss lot machine machinery magazine maize majority
mandate mango manufacturer margin market marketing marketplace mayor meal
measure mechanism mechanization medicine meeting member membership memo
merchant merger metal meter method metric microcredit middleman migrant
migration mile mill miller million mine minister ministry minority mission
mix model moisture moment monopoly monsoon month moratorium mortgage motion
motor movement municipality mushroom nation negotiation neighbor neighborhood
network news newspaper niche nitrogen node nomination norm notice notification
number nursery nutrient nutrition oat obligation observer obstacle occasion
ocean offer office officer official oil oilseed operation operator opinion
opponent opportunity option orchard order organization organizer origin outbreak
outcome outlay outlet outlook output oversight owner ownership package packet
pact paddy page pandemic panel paper parasite parcel parliament part participant
partner partnership party passage pasture patent path pathogen pattern payment
payout pea peanut peasant penalty pension percent percentage performance period
permit person personnel pest pesticide petition petroleum phase phenomenon
phosphate pig pipeline plain plan plane planner plant plantation planter
planting plot poultry poverty power practice precipitation prediction premium
preparation presence president pressure price principle priority prison
probability problem procedure proceeding process processor procurement produce
producer product production productivity profession professor profile profit
program progress prohibition project projection promise promotion proponent
proposal proposition prospect protection protein protest protocol province
provision publication pump purchase purchaser purpose quality quantity quarter
question queue quota railroad railway rainfall rainwater rally ranch rancher
range rate ratio ration reaction reader rebate recession recommendation record
recovery reduction referendum refinery reform refrigeration refund regime
region registry regulation regulator rehabilitation relation relationship
release relief remark remedy remittance rent repayment replacement report
reporter representative republic reputation requirement research researcher
reserve reservoir resident residue resistance resolution resource respondent
response responsibility restaurant restriction result retailer return revenue
review revision reward rice right risk river road role root rotation route
routine rule ruling rumor sack safeguard safety sale sample sanction satellite
scale scandal scarcity scenario schedule scheme scholar scholarship school
science scientist score season seawater secretariat secretary section sector
security seed seedling segment seller seminar senate senator sensor sentiment
series service session setback settlement share shareholder shed sheep shelf
shelter shift shilling shipment shipper shock shop shopper shore shortage
shortfall shower side signal silo site situation skill slaughterhouse slice
slide slogan slope smallholder society soil solution sorghum source soybean
space span speaker specialist specification spectrum speech spending sphere
spike spokesman sponsor spot spray spread spring sprinkler stabilization stable
stadium staff stage stake stakeholder stall standard staple startup statement
station statistic status statute steel stem step stimulus stock stockpile
storage store storm strategy stream street stress stretch strike structure
struggle student study subcommittee subsidy substance substitute suburb success
sugar sugarcane suit summit supermarket supervisor supplier supply support
surcharge surge surplus survey suspension sustainability symposium syndicate
system target tariff task taxpayer team technician technique technology
temperature tenant tender tension term territory test testimony theme theory
threat threshold tide tier tillage timber ton tonne tool topic tornado total
tour tourism towel tower town tractor trade trader tradition traffic trail
trailer train trainer training transaction transfer transformation transition
transport transporter treatment treaty tree trench trend trial tribunal tribute
trip truck trucker trustee tube turbine turnover type typhoon union unit
university upgrade uprising usage user utility vaccination vaccine valley value
variety vegetable vehicle vendor venture verdict version veterinarian vicinity
victim victory village villager vine vineyard violation visit visitor voice
volume volunteer voter wage wagon warehouse warning waste water watershed wave
weather website week weekend weevil weight welfare well wheat wheel wholesaler
windmill window winner winter worker workforce workshop world yard year yield
zone
""".split()

# Adjectives (comparative/superlative rows map back to the base form).
ADJECTIVES = """
big* bleak bright broad calm cheap clean clear close cold cool damp dark deep
dense dim* dry dull faint fair fast few fierce firm flat fresh full grand grave
great green hard harsh heavy high hot* huge keen large late lean light long
loose loud mild narrow near new nice old pale poor proud quick quiet rare
rich ripe rough sharp short simple slow small smart smooth soft sound stale
steep stiff strict strong sweet swift tall thick thin* tight tough vast warm
weak wet* wide wild young
""".split()

# Gerunds lemmatized to themselves because the noun reading dominates in
# news text ("hearings", "rulings"); the -ing verb row is suppressed.
GERUND_NOUNS = frozenset(
    """
    engineering hearing holding marketing meeting planting ruling spending
    training warning
    """.split()
)

IRREGULAR_VERBS = {
    # lemma: (past, past participle, 3rd person, present participle);
    # the participle is omitted where GERUND_NOUNS claims it.
    "be": ("was", "been", "is", "being"),
    "bear": ("bore", "borne", "bears", "bearing"),
    "beat": ("beat", "beaten", "beats", "beating"),
    "become": ("became", "become", "becomes", "becoming"),
    "begin": ("began", "begun", "begins", "beginning"),
    "bend": ("bent", "bent", "bends", "bending"),
    "bind": ("bound", "bound", "binds", "binding"),
    "bite": ("bit", "bitten", "bites", "biting"),
    "blow": ("blew", "blown", "blows", "blowing"),
    "break": ("broke", "broken", "breaks", "breaking"),
    "breed": ("bred", "bred", "breeds", "breeding"),
    "bring": ("brought", "brought", "brings", "bringing"),
    "build": ("built", "built", "builds", "building"),
    "burst": ("burst", "burst", "bursts", "bursting"),
    "buy": ("bought", "bought", "buys", "buying"),
    "catch": ("caught", "caught", "catches", "catching"),
    "choose": ("chose", "chosen", "chooses", "choosing"),
    "come": ("came", "come", "comes", "coming"),
    "cost": ("cost", "cost", "costs", "costing"),
    "cut": ("cut", "cut", "cuts", "cutting"),
    "deal": ("dealt", "dealt", "deals", "dealing"),
    "dig": ("dug", "dug", "digs", "digging"),
    "do": ("did", "done", "does", "doing"),
    "draw": ("drew", "drawn", "draws", "drawing"),
    "drink": ("drank", "drunk", "drinks", "drinking"),
    "drive": ("drove", "driven", "drives", "driving"),
    "eat": ("ate", "eaten", "eats", "eating"),
    "fall": ("fell", "fallen", "falls", "falling"),
    "feed": ("fed", "fed", "feeds", "feeding"),
    "feel": ("felt", "felt", "feels", "feeling"),
    "fight": ("fought", "fought", "fights", "fighting"),
    "find": ("found", "found", "finds", "finding"),
    "flee": ("fled", "fled", "flees", "fleeing"),
    "fly": ("flew", "flown", "flies", "flying"),
    "forbid": ("forbade", "forbidden", "forbids", "forbidding"),
    "forecast": ("forecast", "forecast", "forecasts", "forecasting"),
    "forget": ("forgot", "forgotten", "forgets", "forgetting"),
    "forgive": ("forgave", "forgiven", "forgives", "forgiving"),
    "freeze": ("froze", "frozen", "freezes", "freezing"),
    "get": ("got", "gotten", "gets", "getting"),
    "give": ("gave", "given", "gives", "giving"),
    "go": ("went", "gone", "goes", "going"),
    "grind": ("ground", "ground", "grinds", "grinding"),
    "grow": ("grew", "grown", "grows", "growing"),
    "hang": ("hung", "hung", "hangs", "hanging"),
    "have": ("had", "had", "has", "having"),
    "hear": ("heard", "heard", "hears"),
    "hide": ("hid", "hidden", "hides", "hiding"),
    "hit": ("hit", "hit", "hits", "hitting"),
    "hold": ("held", "held", "holds"),
    "hurt": ("hurt", "hurt", "hurts", "hurting"),
    "keep": ("kept", "kept", "keeps", "keeping"),
    "know": ("knew", "known", "knows", "knowing"),
    "lay": ("laid", "laid", "lays", "laying"),
    "lead": ("led", "led", "leads", "leading"),
    "leave": ("left", "left", "leaves", "leaving"),
    "lend": ("lent", "lent", "lends", "lending"),
    "let": ("let", "let", "lets", "letting"),
    "lie": ("lain", "lain", "lies", "lying"),
    "lose": ("lost", "lost", "loses", "losing"),
    "make": ("made", "made", "makes", "making"),
    "mean": ("meant", "meant", "means", "meaning"),
    "meet": ("met", "met", "meets"),
    "outdo": ("outdid", "outdone", "outdoes", "outdoing"),
    "outgrow": ("outgrew", "outgrown", "outgrows", "outgrowing"),
    "outrun": ("outran", "outrun", "outruns", "outrunning"),
    "overcome": ("overcame", "overcome", "overcomes", "overcoming"),
    "overdo": ("overdid", "overdone", "overdoes", "overdoing"),
    "overhear": ("overheard", "overheard", "overhears", "overhearing"),
    "overrun": ("overran", "overrun", "overruns", "overrunning"),
    "overtake": ("overtook", "overtaken", "overtakes", "overtaking"),
    "overthrow": ("overthrew", "overthrown", "overthrows", "overthrowing"),
    "pay": ("paid", "paid", "pays", "paying"),
    "prove": ("proved", "proven", "proves", "proving"),
    "put": ("put", "put", "puts", "putting"),
    "quit": ("quit", "quit", "quits", "quitting"),
    "read": ("read", "read", "reads", "reading"),
    "rebuild": ("rebuilt", "rebuilt", "rebuilds", "rebuilding"),
    "redo": ("redid", "redone", "redoes", "redoing"),
    "repay": ("repaid", "repaid", "repays", "repaying"),
    "rethink": ("rethought", "rethought", "rethinks", "rethinking"),
    "ride": ("rode", "ridden", "rides", "riding"),
    "ring": ("rang", "rung", "rings", "ringing"),
    "rise": ("rose", "risen", "rises", "rising"),
    "run": ("ran", "run", "runs", "running"),
    "say": ("said", "said", "says", "saying"),
    "see": ("saw", "seen", "sees", "seeing"),
    "seek": ("sought", "sought", "seeks", "seeking"),
    "sell": ("sold", "sold", "sells", "selling"),
    "send": ("sent", "sent", "sends", "sending"),
    "set": ("set", "set", "sets", "setting"),
    "shake": ("shook", "shaken", "shakes", "shaking"),
    "shed": ("shed", "shed", "sheds", "shedding"),
    "shine": ("shone", "shone", "shines", "shining"),
    "shoot": ("shot", "shot", "shoots", "shooting"),
    "show": ("showed", "shown", "shows", "showing"),
    "shrink": ("shrank", "shrunk", "shrinks", "shrinking"),
    "shut": ("shut", "shut", "shuts", "shutting"),
    "sing": ("sang", "sung", "sings", "singing"),
    "sink": ("sank", "sunk", "sinks", "sinking"),
    "sit": ("sat", "sat", "sits", "sitting"),
    "sleep": ("slept", "slept", "sleeps", "sleeping"),
    "slide": ("slid", "slid", "slides", "sliding"),
    "sling": ("slung", "slung", "slings", "slinging"),
    "stink": ("stank", "stunk", "stinks", "stinking"),
    "stride": ("strode", "stridden", "strides", "striding"),
    "sow": ("sowed", "sown", "sows", "sowing"),
    "speak": ("spoke", "spoken", "speaks", "speaking"),
    "speed": ("sped", "sped", "speeds", "speeding"),
    "spend": ("spent", "spent", "spends"),
    "spin": ("spun", "spun", "spins", "spinning"),
    "split": ("split", "split", "splits", "splitting"),
    "spread": ("spread", "spread", "spreads", "spreading"),
    "spring": ("sprang", "sprung", "springs", "springing"),
    "stand": ("stood", "stood", "stands", "standing"),
    "steal": ("stole", "stolen", "steals", "stealing"),
    "stick": ("stuck", "stuck", "sticks", "sticking"),
    "sting": ("stung", "stung", "stings", "stinging"),
    "strike": ("struck", "struck", "strikes", "striking"),
    "strive": ("strove", "striven", "strives", "striving"),
    "swear": ("swore", "sworn", "swears", "swearing"),
    "sweep": ("swept", "swept", "sweeps", "sweeping"),
    "swell": ("swelled", "swollen", "swells", "swelling"),
    "swim": ("swam", "swum", "swims", "swimming"),
    "swing": ("swung", "swung", "swings", "swinging"),
    "take": ("took", "taken", "takes", "taking"),
    "teach": ("taught", "taught", "teaches", "teaching"),
    "tear": ("tore", "torn", "tears", "tearing"),
    "tell": ("told", "told", "tells", "telling"),
    "think": ("thought", "thought", "thinks", "thinking"),
    "throw": ("threw", "thrown", "throws", "throwing"),
    "understand": ("understood", "understood", "understands", "understanding"),
    "undergo": ("underwent", "undergone", "undergoes", "undergoing"),
    "underlie": ("underlay", "underlain", "underlies", "underlying"),
    "undertake": ("undertook", "undertaken", "undertakes", "undertaking"),
    "undo": ("undid", "undone", "undoes", "undoing"),
    "upset": ("upset", "upset", "upsets", "upsetting"),
    "wake": ("woke", "woken", "wakes", "waking"),
    "wear": ("wore", "worn", "wears", "wearing"),
    "weave": ("wove", "woven", "weaves", "weaving"),
    "weep": ("wept", "wept", "weeps", "weeping"),
    "win": ("won", "won", "wins", "winning"),
    "withdraw": ("withdrew", "withdrawn", "withdraws", "withdrawing"),
    "withstand": ("withstood", "withstood", "withstands", "withstanding"),
    "wring": ("wrung", "wrung", "wrings", "wringing"),
    "write": ("wrote", "written", "writes", "writing"),
}

IRREGULAR_NOUNS = {
    # plural: singular
    "aquifers": "aquifer",
    "analyses": "analysis",
    "axes": "axis",
    "bases": "basis",
    "bureaux": "bureau",
    "cacti": "cactus",
    "calves": "calf",
    "censuses": "census",
    "children": "child",
    "crises": "crisis",
    "criteria": "criterion",
    "diagnoses": "diagnosis",
    "feet": "foot",
    "fungi": "fungus",
    "geese": "goose",
    "halves": "half",
    "hooves": "hoof",
    "hypotheses": "hypothesis",
    "indices": "index",
    "knives": "knife",
    "leaves": "leaf",
    "lives": "life",
    "loaves": "loaf",
    "media": "medium",
    "men": "man",
    "mice": "mouse",
    "nuclei": "nucleus",
    "oases": "oasis",
    "oxen": "ox",
    "people": "person",
    "phenomena": "phenomenon",
    "sheaves": "sheaf",
    "shelves": "shelf",
    "stimuli": "stimulus",
    "syntheses": "synthesis",
    "teeth": "tooth",
    "theses": "thesis",
    "thieves": "thief",
    "wharves": "wharf",
    "wives": "wife",
    "wolves": "wolf",
    "women": "woman",
}

# Mass or invariant nouns kept as lemmas but never pluralized.
UNCOUNTED_NOUNS = frozenset(
    """
    agriculture cattle engineering equipment evidence governance guidance
    infrastructure livestock machinery maize marketing mechanization moisture
    news nutrition personnel poverty precipitation produce rice series sheep
    spending sustainability tourism welfare wheat
    """.split()
)

# Invariant nouns the -s fallback would clip ("bus" -> "bu" etc.) or whose
# singular already ends the way a rule targets.
INVARIANT_WORDS = """
always analysis atlas basis bias bonus bus business campus canvas cargoes
data
census chaos christmas circus citrus consensus corps crisis diabetes
emphasis ethics focus gas genus iris lens logistics means news physics
plus series species status surplus syllabus tennis thus status virus whereas
""".split()


def build() -> dict[str, str]:
    table: dict[str, str] = {}

    def put(inflected: str, lemma: str, force: bool = False) -> None:
        if inflected == lemma:
            return
        if inflected in table and not force:
            return
        table[inflected] = lemma

    # Irregulars first so they win conflicts ("leaves" -> leaf, not leave).
    for lemma, forms in IRREGULAR_VERBS.items():
        for form in forms:
            put(form, lemma, force=True)
    for plural_form, singular in IRREGULAR_NOUNS.items():
        put(plural_form, singular, force=True)

    for raw in VERBS:
        double = raw.endswith("*")
        verb = raw.rstrip("*")
        if verb in IRREGULAR_VERBS:
            continue
        put(verb_s(verb), verb)
        if verb_ing(verb, double) not in GERUND_NOUNS:
            put(verb_ing(verb, double), verb)
        put(verb_ed(verb, double), verb)

    irregular_singulars = set(IRREGULAR_NOUNS.values())
    for noun in NOUNS:
        if noun in irregular_singulars or noun in UNCOUNTED_NOUNS:
            continue
        put(plural(noun), noun)

    for raw in ADJECTIVES:
        double = raw.endswith("*")
        adj = raw.rstrip("*")
        if double:
            put(adj + adj[-1] + "er", adj)
            put(adj + adj[-1] + "est", adj)
        else:
            put(comparative(adj), adj)
            put(superlative(adj), adj)

    for word in INVARIANT_WORDS:
        table.setdefault(word, word)

    # Stopwords run through lemmatization before removal; pin any the
    # fallback would rewrite ("this" -> "thi") so the mangled form cannot
    # leak past the stoplist.
    stopwords_path = Path(__file__).resolve().parent.parent / "src" / "agrisk" / "data" / "stopwords.txt"
    for line in stopwords_path.read_text(encoding="utf-8").splitlines():
        word = line.strip()
        if not word or word.startswith("#"):
            continue
        if fallback_lemma(word, frozenset()) != word:
            table.setdefault(word, word)

    # Identity guards: if the fallback rules would rewrite a known lemma,
    # pin it to itself ("seed" would otherwise lose its -ed).
    lemmas = set(table.values())
    lemmas.update(w.rstrip("*") for w in VERBS)
    lemmas.update(NOUNS)
    lemmas.update(w.rstrip("*") for w in ADJECTIVES)
    known = frozenset(lemmas)
    for lemma in sorted(lemmas):
        if lemma not in table and fallback_lemma(lemma, known) != lemma:
            table[lemma] = lemma

    # Idempotence: lemmatizing any table output must be a fixed point.
    final_lemmas = frozenset(table.values())
    for value in sorted(final_lemmas):
        resolved = table.get(value) or fallback_lemma(value, final_lemmas)
        if resolved != value:
            raise AssertionError(f"lemma {value!r} resolves to {resolved!r}")
    return table


def main() -> int:
    table = build()
    lines = [f"{k}\t{v}" for k, v in sorted(table.items())]
    header = (
        "# English inflection table: inflected<TAB>lemma, one row per form.\n"
        "# Generated by tools/build_lemma_table.py; do not edit by hand.\n"
    )
    OUT.write_text(header + "\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} rows to {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
