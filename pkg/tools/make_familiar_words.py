"""One-time generator for the bundled familiar-word fixture.

Writes ~3,000 common English words (curated base vocabulary plus regular
inflections of everyday verbs/nouns), one per line, sorted and deduplicated.
Not a reproduction of any specific historical list; it is a working default
for Dale-Chall-style familiarity checks and is fully replaceable via the
--familiar flag / load_familiar_words().
"""

BASE = """
a about above across act add afraid after afternoon again against age ago agree air all almost alone along
already also always am among an and angry animal another answer any anybody anyone anything appear apple are
area arm around arrive art as ask at ate aunt autumn away baby back bad bag ball balloon banana band bank bar
barn base basket bat bath be beach bean bear beat beautiful became because become bed bee been before began
begin behind being believe bell belong below belt bench bend beside best better between big bike bill bird
birthday bit bite black blanket blew block blood blow blue board boat body bone book boot born borrow both
bottle bottom bought bowl box boy branch brave bread break breakfast breath brick bridge bright bring broke
brother brought brown brush build built burn bus bush business busy but butter button buy by cabin cage cake
call came camp can candle candy cap car card care careful carry cart case cat catch cattle caught cause cave
cent center chain chair chance change chase cheap check cheek cheese cherry chest chicken chief child children
chin choose church circle city clap class clay clean clear climb clock close cloth cloud coat coffee cold
collect color come comfort company cook cool copy corn corner cost cotton could count country course cousin
cover cow crack cream cross crowd cry cup curtain cut dad daily dance danger dark date daughter day dead dear
decide deep deer desk did die different dig dinner direction dirt dish do doctor does dog doll dollar done
door double down dozen drank draw dream dress drink drive drop drove dry duck during dust each eager ear early
earn earth east easy eat edge egg eight either elephant eleven else empty end enemy enjoy enough enter even
evening ever every everybody everyone everything exact except excite expect explain eye face fact fair fall
family fan far farm farmer fast fat father fault favor fear feed feel feet fell felt fence few field fifth
fifty fight fill film find fine finger finish fire first fish fit five fix flag flat flew floor flower fly
fold follow food foot for forest forget forgot fork form forth forty forward found four fourth fox free fresh
friend frog from front fruit full fun funny fur game garden gate gather gave get gift girl give glad glass go
goat goes gold gone good got grade grand grass gray great green grew ground group grow guess had hair half
hall hand hang happen happy hard has hat have he head hear heard heart heat heavy held hello help hen her
here herself hid hide high hill him himself his hit hold hole holiday home honey hope horn horse hot hour
house how hug huge hundred hung hungry hunt hurry hurt husband ice idea if ill in inch indeed inside instead
into iron is it its itself jacket jar job join joke joy jump just keep kept key kick kid kill kind king kiss
kitchen kite knee knew knife knock know lady laid lake lamp land large last late laugh lay lazy lead leaf
learn least leave left leg lemon lend less let letter lift light like line lion lip list listen little live
load loaf long look lose lost lot loud love low luck lunch made mail make man many map march mark market
match matter may maybe me meal mean meant measure meat meet melt men mend met middle might mile milk mill
mind mine minute miss mix moment money monkey month moon more morning most mother mountain mouse mouth move
much mud music must my myself nail name near neck need needle neighbor neither nest never new next nice night
nine no nobody nod noise none noon nor north nose not note nothing now number nurse nut oak ocean of off
offer office often oh oil old on once one onion only open or orange order other our out outside oven over
own page paid pail pain paint pair pan paper parent park part party pass past paste path paw pay pea peace
peach pear pen pencil penny people perhaps person pet pick picnic picture pie piece pig pile pin pine pink
place plain plan plane plant plate play please plenty pocket point pole pond pony poor pop porch post pot
potato pound pour present press pretty prize promise proud pull puppy push put queen quick quiet quite rabbit
race rag rain raise ran ranch rather reach read ready real red remember rest ribbon rice rich ride right ring
ripe rise river road roar rock rode roll roof room rope rose round row rub rug rule run rush sad safe said
sail salt same sand sang sat save saw say school sea seat second see seed seem seen sell send sent set seven
several sew shade shake shall shape share sharp she sheep shell shine ship shirt shoe shone shook shop shore
short shot should shoulder shout show shut sick side sign silk silly silver simple since sing sister sit six
size skin skirt sky sled sleep slide slow small smell smile smoke snow so soap sock soft sold some somebody
someone something sometimes son song soon sore sorry sound soup south space speak spell spend spent spill
spin spoon sport spot spread spring square squirrel stand star start stay step stick still stone stood stop
store storm story stove straight strange street strong such sudden sugar suit summer sun supper sure sweet
swim table tail take talk tall tap taste teach teacher team tear teeth tell ten tent than thank that the
their them then there these they thick thin thing think third thirty this those though thought thousand
three threw throat through throw thumb ticket tie tiger tight time tiny tip tire to today toe together told
tomorrow tone tongue tonight too took tool tooth top touch toward tower town toy trade train trap tree trick
trip truck true trust try turn twelve twenty twice two ugly uncle under understand until up upon us use very
visit voice wagon wait wake walk wall want war warm was wash watch water wave way we weak wear weather week
well went were west wet what wheat wheel when where which while white who whole whose why wide wife wild
will win wind window wing winter wipe wise wish with without woke woman women wonder wood wool word wore
work world worm worry worth would write wrong yard year yellow yes yesterday yet you young your yourself
"""

EXTRA = """
able aboard accept accident ache acorn acre admire adventure afterward agreed ahead aim airplane alarm alike
alive alley alligator allow almond alphabet amaze amount amuse anchor ancient anger ankle annoy antler anyhow
anyway apart apartment apologize appetite applaud apron arch argue arithmetic army arrange arrow ash ashamed
asleep attack attend attention attic audience author automobile avenue awake awful ax badge baker bakery
balance bald bale bandage banjo barber bare barefoot barely bargain bark barrel baseball basement bashful
basketball bathe bathtub battle bay beard beast beckon bedroom bedtime beef beet beggar begun behave behold
bellow belly beneath berry beware beyond bib bicycle bigger bind binding birch biscuit bitter blackberry
blackbird blacksmith blame blast blaze bleed bless blind blindfold blink blister blizzard bloom blossom blot
blouse blush boast bobwhite boil bold bonnet bony boom borrowed boss bounce bow bowwow boxcar boxer brain
brake bran brass bravery breast breeze bribe bridle brief brim broad broadcast broom broth brown bruise
brushwood bubble bucket buckle bud buffalo bug buggy bugle bulb bull bullet bumblebee bump bun bunch bundle
bunny burst bury bushel butcher buttercup butterfly buttermilk butterscotch buzz cabbage cackle calendar calf
camel canal canary cannon canoe canyon capital captain capture carefree careless carload carpenter carpet
carriage carrot carve castle caterpillar catfish catsup cellar cereal certain certainly champion channel
chapter charge charm chart chatter cheat cheer chew chill chilly chimney china chip chocolate choice chop
chorus chose chosen christen chuckle churn cider cigarette circus citizen clang clash clasp classroom claw
clerk clever click cliff climate cling cloak clod closet clothes clothing clover clown club cluck clump
coach coal coast cob cobbler cocoa coconut cocoon codfish coffeepot collar comb comfortable comic committee
common compare conductor cone connect contest continue cookie copper cord cork correct cottage couch cough
counter courage cowboy cozy crab cradle cramp cranberry crank crash crawl crazy creak creek creep crept crib
cricket crime cripple croak crook crooked crop cross crossing crow crown cruel crumb crumble crush crust cub
cuff cupboard cupful cure curl curly current curve cushion customer cute dab dairy daisy damage dame damp
dandy daytime deaf deal dent depend deposit describe desert deserve desire destroy devil dew diamond dime
dimple dine ding dip direct dirty disappear disappoint discover disease dislike dismiss ditch dive divide
dock dodge doe dollhouse donkey doorbell doorstep dope dot doubt dough dove downstairs downtown dragon drain
drag dresser dressmaker drift drill drip drizzle drown drowsy drug drum dull dumb dump dusty duty dwarf dye
eagle earache eastern echo elbow elder electric elm elsewhere encourage engine engineer english entrance
envelope equal erase errand escape eve everyday everywhere evil exchange excuse exit expert extra fable
fade fail faint fairy faith fake false fame fancy faraway fare farewell farther fashion fasten fatter faucet
feast feather feeble feet fellow female fever fib fiddle fierce fife fifteen fig filling finger fireplace
firearm firecracker fireworks fisherman fist flake flame flap flash flashlight flea flesh flick flight flip
float flock flood flop flour flow flutter foam fog foggy foolish football forehead forenoon forever forgive
fort fortune fountain fowl frame freedom freeze freight fret fright frighten fringe frost frown froze fry
fudge fuel fully fumble fun funnel furniture fuss gallon gallop gang garage garbage gasp gaze gear geese
general gentle gentleman geography giant giddy gingerbread glance glare gleam glide glory glove glow glue
gobble godmother golden goldfish golf goodbye goodness goody goose gooseberry govern government gown grab
graceful grain grandchild grandfather grandmother grandson grape grapefruit grasshopper grateful grave gravel
graveyard gravy grease greet grind groan grocery grove grumble grunt guard guest guide gulf gum gun gunpowder
guy habit hail haircut hairpin halt ham hammer hamper handful handkerchief handle handsome handwriting hanger
happily harbor harden hardly hardship hardware harm harness harp harvest haste hasten hasty hatch hatchet
hate haul hawk hay hayfield haystack headache heal health healthy heap heater heaven hedge heel height helmet
helper helpful hem herd hero herself hickory hidden highway hint hip hire hiss history hitch hive ho hoe hog
holder hollow holy homely homesick honest hood hoof hook hoop hop hopeful hopeless horror horseback horseshoe
hose hospital hotel hound hourly housetop housewife housework howl humble hump hunger hunter hurrah hush hut
hymn icy ideal important impossible improve inchworm income indoors ink inn insect instant insult intend
interested invite itch ivory ivy jail jam jelly jellyfish jerk jig jingle journey judge jug juice juicy
junior junk kettle kindly kindness kingdom kitten kitty knit knot label lace ladder lamb lame lantern lap
lard lash lasso latch laughter laundry lawn lawyer leader league leak lean leap leather lecture ledge
leftover lettuce level liberty librarian library lick lid lie lighthouse lightness lightning likely limb
lime limp linen liner link liquid liver lively lizard loan lob lobster locomotive log lone lonely lonesome
loop loose lord lose loser loss lovely lover lumber lump lunchbox mad magazine magic maid major male mama
mammal manager mane manger maple marble mare marriage marry mask mast master mat mattress mayor meadow
meanwhile medicine melon member memory merry message metal mew mice midnight mighty mild miler million
minister mint mischief miserable misery mist mistake mitten moan mob moccasin mock model modern mole monster
moo mood moonlight moose mop moreover mostly motel moth motor motorcycle mount mournful movie mower muddy
mule multiply mumps murder muscle museum mushroom musician mute mutter mutton muzzle mystery nap napkin
narrow nasty naughty navy nearby nearly neat necktie needful negro nephew nerve net nevermore newspaper
nibble nickel niece nightgown nineteen ninety noble nonsense noodle normal northern notice novel nowhere
nuisance oar oatmeal oats obey object oblige observe occur odd odor offend officer oftentimes oldest olive
onward opera operate opinion opossum opposite orchard organ ostrich otherwise ouch ought outdoors outfit
outlaw outline outward overalls overcoat overcome overeat overhead overhear overnight overturn owe owing owl
owner ox pace pack package pad paddle pagoda pal palace pale palm pancake pansy pants papa parade pardon
parlor partly partner pasture pat patch patter pattern pave pavement peak peanut pearl peck peek peel peep
peg pelt pen pepper peppermint perfume period permit pest phone piano pickle pigeon piggy pillow pilot
pimple pinch pineapple pint pipe pistol pit pitch pitcher pity plainly planner platform platter playground
playhouse playmate plaything pleasant pleasure plod plot plow plug plum plumber plump plunge poem poison
poke polar police polish polite pony pool pop popcorn porch pork porridge portion possible postage postman
powder power powerful praise pray prayer preach precious prepare pressure pretend prick prince princess
print prison prisoner prize prompt proof prop proper protect prove prune public puddle puff pump pumpkin
punch punish pup pupil puppet pure purple purse puss pussy puzzle quack quart quarter quartz queer question
quilt quit rack radio radish raft rail railroad railway raisin rake rambler rap rapid rat rate rattle raw
ray razor reader reap rear reason rebuild receive recess recite record redbird refuse region reindeer
rejoice relief remain remove rent repair repeat report require rescue respect return review reward rhyme
rib rid riddle rider rim rind ripen ripple risk roadside roam roast robber robe robin rocket rocky roller
rooster root rot rotten rough route royal rubbed rubber rubbish ruby rude ruffle ruin ruler rumble runner
rust rusty sack saddle sadness safety sake salad sale sailor salute sample sandwich sandy sap sash sauce
saucer sausage savage scab scale scamp scar scare scarf scatter scene scenery scent scholar schoolboy
schoolhouse schoolmaster schoolroom scorch score scorn scout scrap scrape scratch scream screen screw scrub
seal seam search season seesaw select selfish sense sentence separate servant serve service setting settle
seventeen seventy shabby shack shadow shady shallow shame shampoo shan't shape shave shear shed sheet shelf
shepherd sheriff shift shimmer shiver shock shoemaker shorten shotgun shovel shower shriek shrub shy sideways
sigh sight signal silence silent sill simply sin sincere sink sip sir sis sissy sitter sixteen sixty skate
skater ski skip slam slap slate slave sleepy sleet sleeve sleigh slept slice slid slight slip slipper
slippery slit slope sly smack smart smooth snail snake snap snapping sneeze sniff snort snowball snowflake
snug soak socket sod soda sofa soil soldier solid somehow somewhere sometime soothe sour sowing spade spank
sparrow speaker spear speech speed spider spike spit splash spoil spoke sponge spool sprang sprawl spray
sprinkle sprout spy squash squeak squeeze stable stack stage stair stale stall stamp stangle starve state
station stationery statue steady steak steal steam steamboat steel steep steeple steer stem stepping stew
stiff sting stingy stir stitch stocking stole stolen stoop stopper stopping storekeeper stork storybook
stout stove stranger strap straw strawberry stream stretch string strip stripe struck stub stubborn stump
stung stupid sty style subject succeed success suck suffer sum sunburn sundown sunflower sunlight sunny
sunrise sunset sunshine supply suppose surely surface surprise swallow swam swamp swan swat sway swear sweat
sweater sweep swell swept swift swing switch sword swore tablecloth tablespoon tablet tack tag tailor talker
tame tan tank tape tardy task tax teaspoon telephone television temper tender tennis term terrible test
thankful theater thee therefore thermometer thief thimble thirsty thirteen thorn thread threat thrill throne
thump thunder thus tickle tidy tilt timber tin tinkle tiptoe tiresome toad toadstool toast tobacco toilet
tomato ton tool toot toothbrush toothpick topple torch torn toss tough tourist towel tractor traffic trail
tramp tray treasure treat tremble trial tribe trim trolley troop trouble trough trousers trout truly trunk
truth tub tube tug tulip tumble tune tunnel turkey turtle tutor twelfth twig twin twist typewriter
umbrella unable unbutton undress unfair unfinished unfold unfriendly unhappy unhurt uniform unkind unknown
unless unpleasant untie unwilling upward useful useless usual valentine valley valuable value vase vegetable
velvet verse vessel victory view village vine violet violin vote vowel voyage waist waken walnut waltz wand
wander warn wart washer wasp waste watchman watermelon waterproof wax wayside weaken wealth weapon weary
weave web wedding wee weed weep weigh welcome western whale wheelbarrow whenever whichever whip whirl whisker
whiskey whisper whistle whiteness wicked wiggle willing willow windmill windy wine wink winner wireless
witch wit wolf wolves wonderful woodpecker wooden woodwork worker workshop worse worst wound woven wrap
wreck wren wring wrist written yarn yawn yearly yell yolk yonder youth zero zone zoo
"""

VERBS_FOR_INFLECTION = """
add answer ask call camp clean climb cook count cover dance dress drop end enjoy farm fill finish fish fix
follow guess hand help hunt jump kick kill kiss laugh learn lift listen live look love mail mark milk miss
mix need open order paint pass pick plant play point pull push rain reach remember rest roll rub sail save
seem show sign smell smile snow sound spell start stay step stop talk taste thank touch trade train trick
trust turn visit wait walk want warm wash watch water wave wish wonder work worry yell
"""


def words_of(block: str) -> list[str]:
    return [w for w in block.split() if w.isascii() and w.replace("'", "").isalpha()]


def main() -> None:
    vocab = set(words_of(BASE)) | set(words_of(EXTRA))
    for verb in words_of(VERBS_FOR_INFLECTION):
        vocab.add(verb)
        vocab.add(verb + "s")
        if verb.endswith("e"):
            vocab.add(verb[:-1] + "ed")
            vocab.add(verb[:-1] + "ing")
        else:
            vocab.add(verb + "ed")
            vocab.add(verb + "ing")
    lines = [
        "# Familiar-word list for Dale-Chall-style readability scoring.",
        "# One lowercase word per line; '#' starts a comment.",
        f"# {len(vocab)} entries: common English base vocabulary plus regular",
        "# inflections of everyday verbs. Replace freely via --familiar.",
    ] + sorted(vocab)
    out = __file__.replace("tools/make_familiar_words.py", "src/laysum/data/familiar_words.txt")
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {len(vocab)} words to {out}")


if __name__ == "__main__":
    main()
