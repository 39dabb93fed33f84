#!/usr/bin/env python3
"""Generate the shipped linguistic data files.

Outputs (under data/):
  stopwords.txt       function-word stoplist, one lowercase form per line
  aux_verbs.txt       auxiliary/modal subset removable by the no-modals variants
  prepositions.txt    preposition subset removable by the no-preps variant
  tag_lexicon.tsv     form <TAB> lemma <TAB> pos <TAB> prior
  dictionary.txt      reference word list for orthographic neighborhoods
  word_counts.tsv     frequency table (header carries corpus size)
  fixtures/inflections.tsv  surface <TAB> lemma <TAB> pos <TAB> rule

The inflection rules here mirror the library's reattachment orthography;
rows in tag_lexicon.tsv and inflections.tsv are ground truth for it.
"""

import os
import sys

OUT = os.path.join(os.path.dirname(__file__), "..", "data")

VOWELS = "aeiou"

DOUBLING = {
    "admit", "begin", "commit", "permit", "submit", "transmit", "omit", "emit",
    "refer", "prefer", "confer", "defer", "infer", "occur", "incur", "recur",
    "concur", "regret", "forget", "control", "patrol", "equip", "excel",
    "propel", "compel", "expel", "repel", "rebel", "deter", "upset",
}

def vowel_groups(w):
    groups, in_v = 0, False
    prev = ""
    for c in w:
        is_v = c in VOWELS or (c == "y" and prev and prev not in VOWELS)
        if prev == "q" and c == "u":
            is_v = False
        if is_v and not in_v:
            groups += 1
        in_v = is_v
        prev = c
    return groups

def doubles_final(w):
    if len(w) < 3:
        return False
    a, b, c = w[-3], w[-2], w[-1]
    if c in VOWELS or c in "wxy":
        return False
    if b not in VOWELS:
        return False
    if a in VOWELS and not (len(w) >= 3 and w[-3] == "u" and len(w) >= 4 and w[-4] == "q"):
        return False
    return vowel_groups(w) == 1 or w in DOUBLING

def attach_s(base):
    if len(base) >= 2 and base[-1] == "y" and base[-2] not in VOWELS:
        return base[:-1] + "ies"
    if base.endswith(("s", "x", "z", "ch", "sh")):
        return base + "es"
    return base + "s"

def attach_ed(base):
    if base.endswith("e"):
        return base + "d"
    if len(base) >= 2 and base[-1] == "y" and base[-2] not in VOWELS:
        return base[:-1] + "ied"
    if doubles_final(base):
        return base + base[-1] + "ed"
    return base + "ed"

def attach_ing(base):
    if base.endswith("e") and not base.endswith("ee") and len(base) > 2:
        return base[:-1] + "ing"
    if doubles_final(base):
        return base + base[-1] + "ing"
    return base + "ing"

def attach_er(base):
    if base.endswith("e"):
        return base + "r"
    if len(base) >= 2 and base[-1] == "y" and base[-2] not in VOWELS:
        return base[:-1] + "ier"
    if doubles_final(base):
        return base + base[-1] + "er"
    return base + "er"

def attach_est(base):
    if base.endswith("e"):
        return base + "st"
    if len(base) >= 2 and base[-1] == "y" and base[-2] not in VOWELS:
        return base[:-1] + "iest"
    if doubles_final(base):
        return base + base[-1] + "est"
    return base + "est"

# --------------------------------------------------------------------------
# Function words. The standard stoplist is the NLTK english list plus the
# modal auxiliaries it omits (documented in README; stoplist v1).
# --------------------------------------------------------------------------

NLTK_STOPWORDS = """
i me my myself we our ours ourselves you you're you've you'll you'd your yours
yourself yourselves he him his himself she she's her hers herself it it's its
itself they them their theirs themselves what which who whom this that that'll
these those am is are was were be been being have has had having do does did
doing a an the and but if or because as until while of at by for with about
against between into through during before after above below to from up down
in out on off over under again further then once here there when where why how
all any both each few more most other some such no nor not only own same so
than too very s t can will just don don't should should've now d ll m o re ve
y ain aren aren't couldn couldn't didn didn't doesn doesn't hadn hadn't hasn
hasn't haven haven't isn isn't ma mightn mightn't mustn mustn't needn needn't
shan shan't shouldn shouldn't wasn wasn't weren weren't won won't wouldn
wouldn't
""".split()

EXTRA_MODALS = "may might must would could shall ought".split()

STOPWORDS = NLTK_STOPWORDS + EXTRA_MODALS

AUX_VERBS = """
am is are was were be been being have has had having do does did doing
can will would could should may might must shall ought
""".split()

PREPOSITIONS = """
of at by for with about against between into through during before after
above below to from up down in out on off over under
""".split()

# (form, pos, prior) for the closed classes; lemma == form.
FUNCTION_WORDS = []

def fw(words, pos, prior):
    for w in words.split():
        FUNCTION_WORDS.append((w, pos, prior))

fw("a an the this that these those each every either neither some any no "
   "all both half such another", "determiner", 6.0)
fw("i me my mine myself we us our ours ourselves you your yours yourself "
   "yourselves he him his himself she her hers herself it its itself they "
   "them their theirs themselves who whom whose what which someone somebody "
   "something anyone anybody anything everyone everybody everything nobody "
   "nothing none", "pronoun", 6.0)
fw("of at by for with about against between into through during before after "
   "above below to from up down in out on off over under across along among "
   "around behind beneath beside besides beyond despite except inside near "
   "onto outside since toward towards underneath unlike until upon within "
   "without", "preposition", 6.0)
fw("and but or nor so yet if because as while than although though unless "
   "whereas whether when where why how that", "conjunction", 5.5)
fw("am is are was were be been being have has had having do does did doing "
   "can will would could should may might must shall ought", "verb_aux", 6.0)
fw("not never also just only even still too very quite rather almost always "
   "often sometimes usually again further then once here there now soon "
   "already perhaps maybe instead anyway however indeed really nearly "
   "enough else away back together apart twice yesterday today tomorrow",
   "adverb", 5.0)
fw("oh ah hey wow well yeah yes okay hello hi huh hmm no um uh", "interjection", 3.0)

# --------------------------------------------------------------------------
# Open-class vocabulary. Band 1 = very frequent ... band 4 = less frequent.
# --------------------------------------------------------------------------

NOUNS_1 = """
time year people way day man woman thing child world life hand part eye place
work week case point company number group problem fact night home water room
mother area money story month lot right study book word business issue side
kind head house service friend father power hour game line end member law car
city community name team minute idea body information back face others level
office door health person art war history party result change morning reason
girl boy guy moment air teacher force education foot gum store street job
""".split()

NOUNS_2 = """
state family student country school question government program system
president voice class music market sense nation plan college interest
experience effect use industry bed bird dog cat horse fish tree flower
mountain river road bridge farm field forest garden grass hill island lake
land ocean rock sand sky snow star stone sun valley wind rain cloud fire
light shadow wall window floor roof kitchen table chair desk bed couch lamp
mirror carpet stair ceiling corner yard fence gate path wood glass metal
paper cloth wire rope tool knife spoon plate cup bottle box bag basket
pocket button coat shirt dress shoe hat glove belt ring watch clock phone
radio screen machine engine wheel boat train plane truck bus ticket map
letter card note sign page picture photo film camera song dance play show
stage scene actor artist writer poet doctor nurse lawyer judge officer
soldier captain king queen prince guard farmer worker driver cook waiter
guest neighbor stranger crowd couple baby kid son daughter brother sister
uncle aunt cousin grandfather grandmother husband wife partner owner leader
boss chief expert witness victim hero enemy spirit ghost angel devil god
dream hope fear anger joy pride shame guilt grief love hate truth lie
secret promise threat warning advice order message news report rumor
""".split()

NOUNS_3 = """
apartment building station airport hospital library museum theater
restaurant hotel bank church temple castle palace tower prison camp base
village town suburb district region border coast shore beach harbor port
cliff cave desert jungle swamp meadow pasture hillside slope peak ridge
trail tunnel highway avenue alley lane square park playground stadium
court courtroom courthouse jury trial crime evidence proof clue weapon gun
knife bullet bomb war battle army navy troop attack defense victory defeat
peace treaty deal contract agreement policy rule regulation license permit
tax budget debt loan profit loss price cost value wage salary income trade
export import supply demand product goods brand label package device
gadget computer laptop keyboard mouse printer network internet website
email password file folder document record database server code program
software hardware signal channel battery charger cable plug switch button
lever handle lock key hinge frame panel board shelf drawer cabinet closet
garage basement attic porch balcony chimney faucet sink drain pipe pump
valve tank barrel bucket jar lid tray pan pot oven stove fridge freezer
mixer toaster kettle napkin towel blanket pillow mattress curtain rug
broom mop sponge soap shampoo brush comb razor scissors needle thread
fabric leather silk cotton wool fur feather shell bone skin blood heart
brain lung liver stomach muscle nerve spine skull jaw tooth tongue lip
cheek chin forehead eyebrow eyelash beard mustache hair neck shoulder arm
elbow wrist finger thumb nail chest waist hip leg knee ankle toe heel
""".split()

NOUNS_4 = """
law firm statute clause amendment constitution congress senate parliament
ministry agency bureau council committee commission board panel delegation
embassy consulate treaty summit referendum ballot election campaign
candidate mayor governor senator minister ambassador diplomat citizen
immigrant refugee resident taxpayer pedestrian passenger tourist pilgrim
scholar professor graduate freshman sophomore tutor pupil mentor apprentice
intern colleague client customer vendor merchant retailer wholesaler
supplier contractor engineer architect technician mechanic plumber
electrician carpenter mason welder miner logger fisherman shepherd
hunter trapper rancher gardener janitor clerk cashier accountant auditor
banker broker trader investor economist analyst consultant manager
director executive chairman founder shareholder spokesman journalist
reporter editor publisher columnist critic reviewer referee umpire coach
athlete runner swimmer climber cyclist skier skater boxer wrestler
pitcher catcher batter goalie striker winger defender midfielder
anthem flag emblem badge medal trophy prize award certificate diploma
degree thesis essay article chapter paragraph sentence phrase syllable
vowel consonant alphabet grammar vocabulary dictionary encyclopedia
novel memoir biography poem verse rhyme fable legend myth tale saga
notebook journal diary ledger archive manuscript scroll parchment
hearing aid priority example device information court legislation
conflict one ones spouse downtown mare nose choice perambulation
essay memoir topic gender politics impact excerpt passage genre
podcast transcript dialogue monologue screenplay fiction novelist
""".split()

VERBS_1 = """
say get make go know take see come think look want give use find tell ask
work seem feel try leave call walk turn start show hear play run move like
live believe hold bring happen write sit stand lose pay meet include
continue set learn change lead understand watch follow stop create speak
read allow add spend grow open buy wait serve die send expect build stay
fall cut reach kill remain suggest raise pass sell require report decide
pull return explain hope develop carry break receive agree support hit
produce eat cover catch draw choose point listen realize place close
involve wish appear talk
""".split()

VERBS_2 = """
accept achieve act admit advise affect afford aim announce answer
apologize applaud apply appoint approach approve argue arrange arrest
arrive assist assume attach attack attempt attend attract avoid bake
balance ban bang bark bathe beg behave belong bend bet blame bless block
blush boast boil borrow bounce bow brag brush bump burn bury buzz
calculate camp care celebrate challenge charge chase cheat check cheer
chew claim clap clean climb collect comb command comment compare compete
complain complete concern confess confirm connect consider consist
contain copy correct cough count crash crawl cross cry damage dance
dare deliver demand deny depend describe deserve destroy disagree
disappear discover discuss dislike divide double doubt drag dream dress
drop drown dry earn employ empty encourage end enjoy enter entertain
escape examine excite excuse exist expand explore express extend face
fail fasten fear fetch fill film fit fix flash float flood flow fold
force form found frame frighten fry gather gaze glance glow grab grant
greet grin guard guess guide hammer hand hang harm hate heal heat help
hide hire honor hop hug hunt hurry identify ignore imagine impress
improve increase inform injure intend interest interrupt introduce
invent invite iron jail jam jog join joke judge jump kick kiss knock
label land last laugh launch lay lend lick lift limit link list loan
lock long love manage march mark marry match matter measure melt mend
mention mind miss mix moan mourn murder nail name need nip nod note
notice number obey object observe obtain occur offer oppose order
organize owe own pack paint park peck peel perform permit pick pin
pitch plan plant please point pour practice praise pray preach prefer
prepare present press pretend prevent print promise protect prove
provide punch punish push question queue race record reduce reflect
refuse regret reject relax release rely remember remind remove repair
repeat replace reply rescue respect rest retire rub ruin rule rush save
scare scatter scold scratch scream seal search seat select settle sew
shake share shave shelter shift shock shout shrug sigh signal sip ski
slam slap slide slip smash smell smile smoke snap sneeze sniff snore
snow soak sound spare spark spell spill spoil spot spray squeeze stamp
stare starve steer step stir stitch strain stretch strike stroll study
stuff subtract succeed suck suffer suit supply suppose surprise
surround survive suspect swallow swear sweep swim swing switch tap
taste tease telephone tempt test thank tick tie tip tire touch tour
trace trade train transport trap travel treat tremble trick trip trot
trust twist type undress unite unlock unpack untie vanish visit wag
wander warn wash waste wave weigh welcome whip whisper whistle wipe
wonder worry wrap wreck yawn yell zoom
""".split()

VERBS_3 = """
abolish absorb accelerate accompany accuse acquire adapt adjust
administer adopt advance advocate allege allocate alter amend analyze
anticipate appeal appreciate arise assemble assert assess assign
associate assure attain attribute authorize award balance bar base
bear beat behold bind bite blast bleed blend bloom blur boost brake
breed brew bribe broadcast bruise cease certify cite clarify classify
cling coach coincide collapse collide combine commence commit
communicate compel compensate compile comply compose comprise
compute conceal concede conceive conclude condemn conduct confer
configure confine confront confuse conquer consent conserve console
consolidate constitute construct consult consume contemplate contend
contest contract contradict contribute convert convey convict convince
cooperate coordinate correspond corrupt counsel crack cruise crumble
crush cultivate dash dazzle debate decay deceive declare decline
decorate decrease dedicate deduce defeat defend defer define deflect
defy delay delete deliberate delight demonstrate denounce depart
deploy deposit deprive derive descend designate desire despise detain
detect deteriorate determine devise devote diagnose dictate differ
dig diminish dip direct disable discard discharge disclose
discourage dismiss dispatch dispense displace display dispose dispute
disrupt dissolve distinguish distort distract distribute disturb dive
divert dominate donate downgrade draft drain drift drill drip dwell
echo edit educate eject elaborate elect eliminate embark embrace
emerge emphasize enable enact enclose encounter endorse endure
enforce engage enhance enlist enrich enroll ensure entail enrage
entitle erase erect erupt escort establish esteem estimate evacuate
evaluate evoke evolve exceed exchange exclaim exclude execute exert
exhaust exhibit expel experience experiment expire exploit export
expose extract fade falter fancy fascinate feature fetch finance
flee fling flip flourish flutter forbid forecast foresee forge
formulate foster fracture fulfill function fund furnish fuse gain
gallop gamble generate glide govern graduate grasp graze grind grip
groan guarantee halt harvest haul heave hesitate hinder hoist honor
host hover howl hum hurl illustrate imitate immerse implement imply
import impose incline incorporate indicate induce indulge infer
inflate inflict inhabit inherit inhibit initiate inject injure
innovate inquire insert insist inspect inspire install instruct
insulate insult integrate interact interfere interpret intervene
invade invalidate invest investigate invoke isolate issue justify
kneel knit lag lament lease lecture legislate lessen liberate
license linger litigate lodge lower lure maintain manipulate
manufacture mask mean mediate meditate merge migrate mimic mingle
minimize mobilize mock modify monitor motivate mount multiply mutter
narrate navigate negotiate nominate notify nourish nurture obscure
obsess obstruct occupy operate oppress opt orbit outline overcome
overlap overlook oversee overturn overwhelm pace paddle pardon
participate pat patrol pause pave peer penetrate perceive perch
persist persuade pervade pinch pioneer pledge plow pluck plunge
poke polish pollute ponder portray pose possess postpone pound
preach precede predict preside prevail proceed process proclaim
prohibit project promote prompt propose prosecute prosper protest
provoke publish pursue qualify quote radiate rattle react reassure
rebuild recall recite reckon recognize recommend reconcile recover
recruit redeem refine reform refrain regain register regulate
rehearse reign reinforce relate relieve relish remark render renew
renounce rent reproduce resemble reserve reside resign resist
resolve resort restore restrain restrict resume retain retreat
retrieve reveal reverse revise revive revolt reward rid rip roam
roar roast rot rotate rouse rustle sacrifice salute sanction scan
scorn scramble scrape scrub seduce seek seize sentence separate
shatter shed shield shiver shove shrink shun signify simmer
simplify simulate sketch skid skim skip slay slump smuggle snatch
soar sob solve soothe sort sow specify speculate spin spit splash
split sprawl spring sprint sprout spur squat squint stab stabilize
stack stagger stain stake stalk stall standardize startle starve
steal steam steer stem stimulate sting stoop strangle stray stress
stride strive stroke structure stumble stun subdue submit subscribe
subside substitute sue summon supervise suppress surge surpass
surrender suspend sustain swell tackle tame tangle taper tax tempt
terminate testify thrash thrive throb thrust tilt toss trail
transfer transform translate transmit tread trigger trim triumph
tuck tug tumble undergo underline undermine undertake unfold
unveil update upgrade uphold urge utilize utter validate value
vary venture verify veto vibrate violate vow wade wail waver weave
weep wield withdraw withstand witness worship wound wrestle yearn
yield conflict graze perambulate
""".split()

# irregular verbs: base past pastparticiple (parts enter the lexicon unsplit)
IRREGULAR_VERBS = """
be was been
bear bore borne
beat beat beaten
become became become
begin began begun
bend bent bent
bet bet bet
bind bound bound
bite bit bitten
bleed bled bled
blow blew blown
break broke broken
breed bred bred
bring brought brought
broadcast broadcast broadcast
build built built
burn burnt burnt
burst burst burst
buy bought bought
catch caught caught
choose chose chosen
cling clung clung
come came come
cost cost cost
creep crept crept
cut cut cut
deal dealt dealt
dig dug dug
dive dove dived
do did done
draw drew drawn
dream dreamt dreamt
drink drank drunk
drive drove driven
dwell dwelt dwelt
eat ate eaten
fall fell fallen
feed fed fed
feel felt felt
fight fought fought
find found found
flee fled fled
fling flung flung
fly flew flown
forbid forbade forbidden
forecast forecast forecast
foresee foresaw foreseen
forget forgot forgotten
forgive forgave forgiven
freeze froze frozen
get got gotten
give gave given
go went gone
grind ground ground
grow grew grown
hang hung hung
have had had
hear heard heard
hide hid hidden
hit hit hit
hold held held
hurt hurt hurt
keep kept kept
kneel knelt knelt
knit knit knit
know knew known
lay laid laid
lead led led
leap leapt leapt
learn learnt learnt
leave left left
lend lent lent
let let let
lie lay lain
light lit lit
lose lost lost
make made made
mean meant meant
meet met met
mistake mistook mistaken
overcome overcame overcome
overtake overtook overtaken
pay paid paid
prove proved proven
put put put
quit quit quit
read read read
ride rode ridden
ring rang rung
rise rose risen
run ran run
say said said
see saw seen
seek sought sought
sell sold sold
send sent sent
set set set
sew sewed sewn
shake shook shaken
shed shed shed
shine shone shone
shoot shot shot
show showed shown
shrink shrank shrunk
shut shut shut
sing sang sung
sink sank sunk
sit sat sat
slay slew slain
sleep slept slept
slide slid slid
sling slung slung
smell smelt smelt
speak spoke spoken
speed sped sped
spell spelt spelt
spend spent spent
spill spilt spilt
spin spun spun
spit spat spat
split split split
spread spread spread
spring sprang sprung
stand stood stood
steal stole stolen
stick stuck stuck
sting stung stung
stink stank stunk
stride strode stridden
strike struck struck
strive strove striven
swear swore sworn
sweep swept swept
swell swelled swollen
swim swam swum
swing swung swung
take took taken
teach taught taught
tear tore torn
tell told told
think thought thought
throw threw thrown
thrust thrust thrust
tread trod trodden
undergo underwent undergone
understand understood understood
undertake undertook undertaken
wake woke woken
wear wore worn
weave wove woven
weep wept wept
win won won
wind wound wound
withdraw withdrew withdrawn
withstand withstood withstood
wring wrung wrung
write wrote written
""".strip().splitlines()

ADJS_1 = """
good new first last long great little own other old right big high
different small large next early young important few public bad same able
sure free low late hard major better best strong possible whole real
federal medical particular additional national local social political
economic legal military religious human personal special certain common
poor natural significant similar entire serious ready simple left
physical general environmental financial current wrong private past
recent final main foreign nice happy sad hot cold warm cool dark bright
light heavy deep wide narrow thick thin tall short quick slow fast loud
quiet clean dirty dry wet rich full empty open closed easy tough safe
dangerous cheap expensive fresh stale sweet sour bitter soft rough
smooth sharp dull flat round square straight curved tight loose near far
close distant
""".split()

ADJS_2 = """
absent abstract absurd abundant academic acceptable accurate active
actual acute adequate administrative adult advanced adverse aesthetic
afraid aggressive agricultural alert alien alive alleged alternative
amazing ambitious ancient angry annual anonymous anxious apparent
appropriate arbitrary architectural artificial ashamed asleep atomic
attractive automatic available average awake aware awful awkward bare
basic beautiful bent biological bitter bizarre black bland blank blind
blond blue bold bony boring bound brave brief brilliant broad broken
brown busy calm capable careful careless casual cautious central
ceremonial chemical chief chilly chronic circular civic civil classic
classical clear clever clinical cloudy clumsy coarse coastal cognitive
coherent collective colonial colorful comfortable comic commercial
compact comparable compatible competent competitive complex
comprehensive compulsory concrete confident conscious conservative
considerable consistent constant constitutional contemporary content
continuous controversial convenient conventional cooperative corporate
correct costly countless courageous crazy creative criminal crisp
critical crooked crucial crude cruel cultural cunning curious curly
cute cynical daily damp dear decent decisive dedicated defensive
definite deliberate delicate delicious democratic dense dependent
desperate destructive detailed determined devoted diagonal digital
diligent dim diplomatic direct disabled disciplined discrete distinct
diverse divine dizzy domestic dominant dormant dramatic drastic dual
dubious dumb durable dusty dynamic eager earnest eastern ecological
educational eerie effective efficient elaborate elastic elderly
electric electrical electronic elegant elementary eligible eloquent
embarrassed eminent emotional empirical enormous enthusiastic equal
equivalent essential eternal ethical ethnic eventual everyday evident
evil exact excellent exceptional excess excessive excited exclusive
executive exotic experimental explicit express exquisite extensive
external extra extraordinary extreme fabulous faint fair faithful
fake familiar famous fancy fantastic fatal favorable favorite feasible
feeble fellow female fertile fierce fine firm fiscal fit flexible
fluent fluid fond formal formidable fortunate forward fragile frank
frequent friendly frozen fundamental funny furious future fuzzy
generic generous genetic gentle genuine geographic gigantic glad
global glorious golden gorgeous graceful gradual grand graphic
grateful grave gray greedy green grim gross guilty handsome handy
harsh healthy hollow holy honest horizontal horrible hostile huge
humble hungry icy ideal identical idle illegal imaginary immediate
immense imminent immune imperial implicit impossible impressive
inclined inclusive incredible independent indifferent indirect
individual indoor industrial inevitable infamous infinite influential
informal inherent initial inner innocent innovative insane instant
institutional intact integral intellectual intelligent intense
intensive interior intermediate internal international intimate
intricate invisible inward ironic irregular irrelevant isolated
jealous joint judicial juvenile keen key kind lame lateral lavish
lazy lean legislative legitimate lethal liable liberal lightweight
likely limited linear liquid literal literary lively living logical
lonely loyal lucky luxurious mad magnetic magnificent male mandatory
manual marginal marine massive mature mean meaningful mechanical
medieval medium mental mere messy mild miniature minimal minor
miserable mobile moderate modern modest moist molecular moral mortal
mobile mutual mysterious naive naked narrow nasty naval neat
necessary negative nervous neutral noble noisy nominal normal
northern notable notorious novel nuclear numerous nutritious obedient
obese objective obscure obvious occasional odd offensive official
operational optical optimal optimistic oral orderly ordinary organic
oriental original ornate orthodox outdoor outer outstanding oval
overall overseas painful pale parallel partial passionate passive
patient peaceful peculiar perfect permanent persistent pessimistic
petty philosophical pink plain plastic pleasant plural polite popular
portable positive potent potential powerful practical precious
precise pregnant preliminary premier premium prescribed presidential
prestigious pretty previous primary prime primitive principal prior
pristine probable productive professional profitable profound
progressive prominent prompt prone proper proportional prospective
prosperous proud provincial prudent psychological punctual pure purple
qualified quaint quiet radical random rapid rare rational raw rear
reasonable rebellious reciprocal reckless rectangular red redundant
refined regional regular relative relevant reliable reluctant remote
renowned repetitive representative reproductive residential resilient
respective responsible restless retail rival robust romantic rosy
rotten royal ruby rude rural rusty sacred salty sane satisfactory
scarce scenic scientific secondary secret secular secure selective
selfish senior sensible sensitive separate severe shabby shallow
shiny shy sick silent silly silver sincere singular sinister skilled
sleek slender slick slight slim slippery smart snug sober sole solemn
solid solitary sophisticated sore southern spacious spare sparse
spatial specific spectacular spicy spiritual splendid spontaneous
stable stark statistical steady steep sticky stiff stubborn
stunning sturdy subsequent substantial subtle suburban sudden
sufficient suitable sunny superb superior supreme surplus
suspicious swift symbolic systematic tactical talented tame tan
technical tedious temporary tender tense terminal terrible
territorial theatrical theoretical thorough thoughtful tidy timely
tiny tolerant toxic traditional tragic tranquil transparent tremendous
tribal tricky tropical ugly ultimate unanimous uneasy uniform unique
united universal unusual upper upright upset urban urgent useful
usual utter vacant vague vain valid valuable vast verbal vertical
viable vibrant vicious victorious vigorous vile vintage virtual
visible visual vital vivid vocal voluntary vulnerable weak wealthy
weary weird welcome western white wicked wild willing wise witty
wooden worthy yellow sunny choosy
""".split()

ADVS = """
quickly slowly carefully quietly loudly suddenly finally eventually
recently currently previously originally particularly especially
generally typically normally basically actually certainly definitely
probably possibly apparently clearly obviously surely truly exactly
directly immediately frequently occasionally rarely seldom constantly
continually gently deliberately eagerly easily barely hardly nearly
completely entirely fully totally absolutely utterly fairly somewhat
slightly moderately extremely highly deeply strongly widely largely
mostly mainly primarily merely simply literally seriously honestly
frankly fortunately unfortunately surprisingly interestingly
accordingly consequently meanwhile moreover nevertheless nonetheless
otherwise regardless somehow somewhere anywhere everywhere nowhere
abroad ahead aside backward forward upward downward inward outward
overnight overseas underground uphill downhill sideways
""".split()

# nouns whose -ing surface is primarily nominal
ING_NOUNS = """
hearing building feeling meeting morning evening painting drawing
beginning ending meaning training reading writing spelling warning
opening covering clothing housing funding finding setting wedding
ceiling
""".split()

IRREGULAR_PLURALS = {
    "man": "men", "woman": "women", "child": "children", "person": "people",
    "foot": "feet", "tooth": "teeth", "goose": "geese", "mouse": "mice",
    "life": "lives", "wife": "wives", "knife": "knives", "leaf": "leaves",
    "shelf": "shelves", "wolf": "wolves", "thief": "thieves", "loaf": "loaves",
    "half": "halves", "self": "selves", "sheep": "sheep", "deer": "deer",
    "fish": "fish", "species": "species", "series": "series",
}

# mass-ish nouns that should not get a plural row
NO_PLURAL = set("""
information water money music air blood gum grass sand snow rain wind
peace health education knowledge advice news furniture luggage traffic
weather wealth evidence legislation consent pride grief guilt
""".split())

EXTRA_DICT_WORDS = """
cliff fluff shrill scroll throne groan grown crown clown brown
frown drown gown town down dawn lawn pawn yawn corn born torn worn horn
scorn sworn shorn stork stock stick stack stuck struck track trick truck
wreck wrack crack creek creak croak cloak chalk stalk flask flash flesh
fresh frost trust crust blast blest boast coast roast toast feast beast
least yeast waist twist wrist shaft craft draft drift swift shift thrift
skill spill still chill drill grill frill quill twill swill trill gulf
golf wolf self shelf whelp help yelp kelp scalp sculpt script crypt
tryst bristle gristle whistle thistle missile fizzle sizzle drizzle
grizzle muzzle nuzzle puzzle guzzle dazzle frazzle swirl twirl whirl
curl hurl burl furl pearl snarl gnarl marl parle charm chasm prism
schism spasm plasma magma sigma stigma dogma karma drama llama comma
gamma mamma manna henna sienna vienna savanna banana bandana cabana
pajama panorama diorama melodrama grandma grandpa sofa tuba scuba aura
flora fauna sauna tundra zebra cobra okra extra ultra contra mantra
tantra yoga toga saga raga lava java guava iguana arena hyena verbena
antenna duenna sonata cantata errata strata data beta zeta theta iota
quota aorta sparta magenta placenta polenta veranda agenda addenda
panda propaganda memoranda anaconda rotunda
crate grate slate plate state skate spate abate agate
bait gait wait trait strait straight freight eight weight sleight
height plight blight bright fright slight night might sight tight
wight fight light right knight
""".split()

def main():
    os.makedirs(OUT, exist_ok=True)
    os.makedirs(os.path.join(OUT, "fixtures"), exist_ok=True)

    def write_list(name, words):
        with open(os.path.join(OUT, name), "w", encoding="utf-8") as f:
            for w in words:
                f.write(w + "\n")

    # stoplist and variant subtraction lists
    stop_seen = []
    for w in STOPWORDS:
        if w not in stop_seen:
            stop_seen.append(w)
    write_list("stopwords.txt", stop_seen)
    write_list("aux_verbs.txt", AUX_VERBS)
    write_list("prepositions.txt", PREPOSITIONS)

    # ---- tag lexicon ----
    rows = []  # (form, lemma, pos, prior)
    inflections = []  # (surface, lemma, pos, rule)

    def add(form, lemma, pos, prior):
        rows.append((form, lemma, pos, prior))

    for form, pos, prior in FUNCTION_WORDS:
        add(form, form, pos, prior)

    noun_bands = [(NOUNS_1, 4.0), (NOUNS_2, 3.0), (NOUNS_3, 2.2), (NOUNS_4, 1.6)]
    seen_nouns = set()
    for group, prior in noun_bands:
        for n in group:
            if n in seen_nouns:
                continue
            seen_nouns.add(n)
            add(n, n, "noun", prior)
            if n in NO_PLURAL:
                continue
            if n in IRREGULAR_PLURALS:
                pl = IRREGULAR_PLURALS[n]
                add(pl, pl, "noun", prior * 0.5)  # irregular: unsplit
                inflections.append((pl, pl, "noun", "none"))
            else:
                pl = attach_s(n)
                rule = "plural_es" if pl.endswith("es") and not n.endswith("e") and not pl.endswith("ies") else "plural_s"
                add(pl, n, "noun", prior * 0.5)
                inflections.append((pl, n, "noun", rule))

    irregular_parts = set()
    irregular_bases = set()
    for line in IRREGULAR_VERBS:
        parts = line.split()
        if len(parts) != 3:
            continue
        base, past, pp = parts
        irregular_bases.add(base)
        for form in (past, pp):
            irregular_parts.add(form)

    verb_bands = [(VERBS_1, 4.0), (VERBS_2, 2.6), (VERBS_3, 1.8)]
    seen_verbs = set()
    for group, prior in verb_bands:
        for v in group:
            if v in seen_verbs:
                continue
            seen_verbs.add(v)
            add(v, v, "verb", prior)
            s3 = attach_s(v)
            add(s3, v, "verb", prior * 0.45)
            inflections.append((s3, v, "verb", "third_s"))
            ing = attach_ing(v)
            ing_pos_prior = prior * 0.4
            add(ing, v, "verb", ing_pos_prior)
            inflections.append((ing, v, "verb", "prog_ing"))
            if v not in irregular_bases:
                ed = attach_ed(v)
                rule = "past_d" if v.endswith("e") else "past_ed"
                add(ed, v, "verb", prior * 0.5)
                inflections.append((ed, v, "verb", rule))

    for line in IRREGULAR_VERBS:
        parts = line.split()
        if len(parts) != 3:
            continue
        base, past, pp = parts
        if base not in seen_verbs:
            add(base, base, "verb", 2.2)
            s3 = attach_s(base)
            add(s3, base, "verb", 1.0)
            inflections.append((s3, base, "verb", "third_s"))
            ing = attach_ing(base)
            add(ing, base, "verb", 0.9)
            inflections.append((ing, base, "verb", "prog_ing"))
        for form in {past, pp}:
            add(form, form, "verb", 1.6)  # irregular parts stay unsplit
            inflections.append((form, form, "verb", "none"))

    adj_bands = [(ADJS_1, 3.4), (ADJS_2, 1.9)]
    seen_adjs = set()
    gradable = set("""
    big small old young new long short tall high low hard soft hot cold
    warm cool dark bright light heavy deep wide thick thin quick slow
    fast loud quiet clean dry wet rich full easy tough safe cheap fresh
    sweet sharp dull flat round tight loose near close great nice happy
    sad strong weak poor late early simple plain calm brave proud sunny
    """.split())
    for group, prior in adj_bands:
        for a in group:
            if a in seen_adjs or not a.isascii() or not a.isalpha():
                continue
            seen_adjs.add(a)
            add(a, a, "adjective", prior)
            if a in gradable:
                er, est = attach_er(a), attach_est(a)
                add(er, a, "adjective", prior * 0.25)
                add(est, a, "adjective", prior * 0.25)
                inflections.append((er, a, "adjective", "comp_er"))
                inflections.append((est, a, "adjective", "sup_est"))

    for adv in ADVS:
        if adv.isascii() and adv.isalpha():
            add(adv, adv, "adverb", 2.0)

    for n in ING_NOUNS:
        add(n, n, "noun", 2.8)

    # dedupe (form, lemma, pos), keep max prior
    best = {}
    for form, lemma, pos, prior in rows:
        key = (form, lemma, pos)
        if key not in best or best[key] < prior:
            best[key] = prior
    lex_rows = sorted((f, l, p, pr) for (f, l, p), pr in best.items())

    with open(os.path.join(OUT, "tag_lexicon.tsv"), "w", encoding="utf-8") as f:
        f.write("# form\tlemma\tpos\tprior\n")
        for form, lemma, pos, prior in lex_rows:
            f.write(f"{form}\t{lemma}\t{pos}\t{prior:.3f}\n")

    # ---- dictionary ----
    dictionary = set()
    for form, lemma, pos, prior in lex_rows:
        if form.isascii() and form.isalpha():
            dictionary.add(form.lower())
    for w in stop_seen:
        if w.isascii() and w.isalpha():
            dictionary.add(w)
    for w in EXTRA_DICT_WORDS:
        if w.isascii() and w.isalpha():
            dictionary.add(w.lower())
    write_list("dictionary.txt", sorted(dictionary))

    # ---- frequency table (synthetic Zipf ranking over the lexicon) ----
    # band order approximates frequency; counts decay like 1/rank.
    by_form = {}
    for form, lemma, pos, prior in lex_rows:
        by_form[form] = max(by_form.get(form, 0.0), prior)
    ranked = [w for w, _ in sorted(by_form.items(), key=lambda kv: (-kv[1], kv[0]))]
    corpus_size = 1_000_000_000
    with open(os.path.join(OUT, "word_counts.tsv"), "w", encoding="utf-8") as f:
        f.write(f"#corpus_size\t{corpus_size}\n")
        top = 55_000_000
        for i, w in enumerate(ranked):
            count = max(int(top / (i + 1.0) ** 1.05), 50)
            f.write(f"{w}\t{count}\n")

    # ---- inflection round-trip fixture (~2k rows) ----
    hand_rows = [
        ("nipping", "nip", "verb", "prog_ing"),
        ("running", "run", "verb", "prog_ing"),
        ("hopping", "hop", "verb", "prog_ing"),
        ("hoping", "hope", "verb", "prog_ing"),
        ("tried", "try", "verb", "past_ed"),
        ("buses", "bus", "noun", "plural_es"),
        ("boxes", "box", "noun", "plural_es"),
        ("churches", "church", "noun", "plural_es"),
        ("studies", "study", "noun", "plural_s"),
        ("specifies", "specify", "verb", "third_s"),
        ("specified", "specify", "verb", "past_ed"),
        ("watches", "watch", "verb", "third_s"),
        ("bigger", "big", "adjective", "comp_er"),
        ("happiest", "happy", "adjective", "sup_est"),
        ("stored", "store", "verb", "past_d"),
        ("walked", "walk", "verb", "past_ed"),
        ("admitted", "admit", "verb", "past_ed"),
        ("visiting", "visit", "verb", "prog_ing"),
        ("went", "went", "verb", "none"),
        ("children", "children", "noun", "none"),
    ]
    dedup = {}
    for r in hand_rows + inflections:
        dedup.setdefault(r[0] + "|" + r[2], r)
    out_rows = list(dedup.values())
    out_rows.sort()
    if len(out_rows) > 2400:
        step = len(out_rows) / 2400.0
        out_rows = [out_rows[int(i * step)] for i in range(2400)]
    with open(os.path.join(OUT, "fixtures", "inflections.tsv"), "w", encoding="utf-8") as f:
        f.write("# surface\tlemma\tpos\trule\n")
        for surface, lemma, pos, rule in out_rows:
            f.write(f"{surface}\t{lemma}\t{pos}\t{rule}\n")

    print(f"lexicon rows: {len(lex_rows)}")
    print(f"dictionary words: {len(dictionary)}")
    print(f"inflection fixture rows: {len(out_rows)}")
    print(f"stopwords: {len(stop_seen)}")

if __name__ == "__main__":
    sys.exit(main())
