#!/usr/bin/env python3
"""Generate src/agrisk/data/toy_corpus.csv.

A hand-authored 30-document news corpus used by the test suite and demos.
Layout decisions the tests rely on:

- ids doc00..doc29, five documents per theme, six themes
- published dates span 2014-2020; exactly 26 fall inside 2015-2019
- no document is published in July 2016 (a deliberate calendar gap)
- doc05 contains the "Dr." abbreviation inside a sentence
- doc01 contains the hyphenated token "drought-resistant"

Themes lean positive or negative on purpose so a scored run produces all
three uncertainty classes.
"""

from __future__ import annotations

import csv
import sys
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "agrisk" / "data" / "toy_corpus.csv"

A = "AgWire"
B = "Harvest Tribune"

DOCS = [
    # --- production risk: disease, pests, weather (negative lean) ---
    ("doc00", "Wheat blight spreads across northern fields",
     "A fungal blight is spreading through wheat fields in the northern "
     "plains, and agronomists warn the disease could destroy a quarter of "
     "the standing crop. Farmers near the city of Korhal reported wilted "
     "plants within days of the first rain. The ministry confirmed the "
     "outbreak but said seed stocks for replanting remain scarce. Losses "
     "from crop disease already worry rural lenders.",
     "2014-03-12", A),
    ("doc01", "Drought stunts maize crop despite resistant seed",
     "A long drought has stunted the maize crop across the southern belt. "
     "Trials of drought-resistant seed varieties helped some growers, but "
     "yields still fell sharply where rainfall stayed absent. Extension "
     "agents fear pest pressure will worsen as weakened plants attract "
     "locusts. One cooperative lost nearly half its harvest. Officials "
     "called the season a disaster for smallholder production.",
     "2015-02-10", B),
    ("doc02", "Locust swarms threaten harvest near river city",
     "Dense locust swarms crossed the river valley this week and threaten "
     "the grain harvest around the city of Meridal. Crop scouts counted "
     "damage in dozens of fields, and panic selling of unripe maize has "
     "begun. The plant protection unit sprayed two districts. Farmers say "
     "the pests arrived faster than any warning reached the villages. "
     "Seed merchants expect heavy replanting demand.",
     "2016-06-18", A),
    ("doc03", "Cattle disease outbreak forces quarantine",
     "Veterinary officers confirmed an outbreak of foot rot among cattle "
     "herds in three districts and ordered a quarantine. Livestock markets "
     "closed, and milk collection fell by a third. Herders fear the "
     "disease will spread before vaccines arrive. The animal health "
     "bureau blamed poor fencing and shared water points. Losses could "
     "push many grazing households into debt.",
     "2017-08-09", B),
    ("doc04", "Late frost ruins orchard blossoms",
     "A late frost swept the western orchards overnight and ruined apple "
     "and apricot blossoms just before fruit set. Growers describe the "
     "damage as the worst in a decade. Crop insurance adjusters began "
     "field visits, but many orchards carry no cover at all. The weather "
     "bureau warns another cold snap may follow. Fruit supply for the "
     "city markets will tighten by autumn.",
     "2019-04-02", A),

    # --- market and price risk (mixed lean) ---
    ("doc05", "Grain prices swing as export ban rumors spread",
     "Grain prices swung wildly this week as rumors of an export ban "
     "moved through the exchange. Dr. Amara, an economist at the trade "
     "institute, said panic rather than supply explains the spike. Maize "
     "futures jumped, then fell back within days. Traders blame thin "
     "stocks and poor market information. The exchange urged calm but "
     "warned that price volatility hurts planting decisions.",
     "2015-11-03", B),
    ("doc06", "Tomato glut crashes wholesale prices",
     "A bumper tomato harvest has crashed wholesale prices to their "
     "lowest level in years. Growers are dumping unsold produce outside "
     "the market gates in protest. Wholesalers say cold storage is full "
     "and transport to distant cities costs more than the crop is worth. "
     "Analysts expect prices to recover slowly, but many vegetable "
     "farmers already face losses this season.",
     "2016-01-19", A),
    ("doc07", "Import tariff decision rattles cotton traders",
     "Cotton traders spent the week guessing how the new import tariff "
     "will move prices. The tariff doubles duty on processed fiber but "
     "leaves raw cotton untouched. Ginners welcome the protection, while "
     "exporters fear retaliation in their best markets. Commodity "
     "analysts call the measure a gamble. Demand from local mills remains "
     "the one bright spot for growers.",
     "2016-06-30", B),
    ("doc08", "Weak demand drags sugar market lower",
     "Sugar prices slid for a fourth straight month as weak demand and "
     "heavy global supply weighed on the market. Refiners cut purchase "
     "quotas, leaving cane growers with standing fields and unpaid bills. "
     "A trade association asked the government for a floor price. "
     "Economists doubt a floor would help exports, but they agree the "
     "slump threatens next year's planting.",
     "2016-08-14", A),
    ("doc09", "Rice exporters celebrate record shipment prices",
     "Rice exporters closed their best quarter on record as shipment "
     "prices climbed steadily. Strong demand from coastal markets and a "
     "favorable exchange rate lifted margins. Millers passed part of the "
     "gain to growers through higher paddy prices. The exporters council "
     "praised the quality push that won premium contracts. Analysts "
     "expect the rally to hold through the harvest.",
     "2018-02-27", B),

    # --- financial and credit risk (positive lean) ---
    ("doc10", "Rural credit scheme doubles loan ceiling",
     "The agricultural bank doubled the loan ceiling under its rural "
     "credit scheme and cut the interest rate for first-time borrowers. "
     "Officials praised the program for reaching remote villages. Loan "
     "officers will tour cooperatives to explain repayment terms. "
     "Economists welcome the expansion and expect farm investment to "
     "improve. Early results show strong repayment and growing savings "
     "among member households.",
     "2015-04-21", A),
    ("doc11", "Crop insurance payout relieves flooded growers",
     "Insurers approved a rapid payout for growers whose fields flooded "
     "last month, and the relief arrived before planting season. The "
     "scheme bundles weather insurance with seasonal credit. Agents "
     "praised the quick claims process. A farm lobby wants the subsidy "
     "extended to livestock cover. Bankers say insured borrowers repay "
     "loans more reliably, which should lower rural interest rates.",
     "2016-03-08", B),
    ("doc12", "Microcredit group celebrates strong harvest returns",
     "A village microcredit group reported strong returns after members "
     "financed shared tractors and better seed. Savings balances grew, "
     "and every loan in the spring cycle was repaid on time. The group "
     "now plans a grain storage fund. A visiting banker called the model "
     "an encouraging success. Members say access to affordable credit "
     "freed them from costly informal lenders.",
     "2017-05-16", A),
    ("doc13", "New subsidy speeds fertilizer financing",
     "A new subsidy lets distributors finance fertilizer purchases for "
     "smallholders at half the old cost. The finance ministry approved "
     "the budget line, and banks agreed to handle payments. Dealers "
     "expect demand to jump before the rains. Farm groups welcomed the "
     "support, though some warn the subsidy must reach remote districts. "
     "Officials promise careful audits of every disbursement.",
     "2018-09-12", B),
    ("doc14", "Savings cooperatives post record membership gains",
     "Rural savings cooperatives posted record membership gains this "
     "year, boosted by mobile payment links and a deposit guarantee. "
     "Managers report healthy balance sheets and falling default rates. "
     "A central bank review praised the sector's governance. New credit "
     "lines will fund irrigation pumps and dairy equipment. Analysts "
     "call rural finance the quiet success of the reform agenda.",
     "2019-10-30", A),

    # --- institutional and legal risk (mild positive lean) ---
    ("doc15", "Land registry reform clears parliament",
     "Parliament passed the land registry reform after a long debate. "
     "The law gives tenant farmers a clear path to title and shortens "
     "boundary disputes. Courts will open special land benches in rural "
     "provinces. Legal aid groups welcomed the change but asked for "
     "funding to train clerks. The ministry says digital records should "
     "cut fraud in land transactions.",
     "2014-09-30", B),
    ("doc16", "New pesticide regulation takes effect",
     "A new pesticide regulation took effect this week, banning two "
     "older compounds and requiring licensed dealers to keep sales "
     "records. Inspectors began farm visits in the cotton belt. The "
     "agriculture ministry says the rules protect water sources and "
     "field workers. Dealers complain the license fee is high. Advocacy "
     "groups call the regulation overdue and largely welcome it.",
     "2015-07-07", A),
    ("doc17", "Court ruling clarifies water rights for irrigators",
     "The high court issued a ruling that clarifies seasonal water "
     "rights along the eastern canal. Upstream estates must now release "
     "scheduled flows to downstream smallholders. Lawyers call the "
     "judgment a landmark for irrigation law. The water authority will "
     "publish allocation tables each season. Farm unions praised the "
     "decision, saying clear rules prevent conflict in dry years.",
     "2016-11-23", B),
    ("doc18", "Seed certification law tightens quality control",
     "A seed certification law now requires every commercial variety to "
     "pass germination and purity tests before sale. The regulator "
     "gains power to recall failing lots and fine dishonest dealers. "
     "Breeders say certification protects their investment in new "
     "varieties. Some small merchants worry about paperwork. The "
     "ministry promises a simple online registry and phased deadlines.",
     "2018-06-05", A),
    ("doc19", "Cooperative governance code wins approval",
     "Regulators approved a governance code for agricultural "
     "cooperatives that sets election rules, audit duties, and member "
     "rights. The code follows several mismanagement scandals. "
     "Federation leaders support the reform and expect it to restore "
     "trust. Training sessions for board members begin next quarter. "
     "Donors said the legal clarity unlocks new institutional funding.",
     "2019-01-15", B),

    # --- enabling environment: infrastructure (positive lean) ---
    ("doc20", "Feeder road upgrade halves market travel time",
     "Crews finished upgrading the feeder road network that links hill "
     "villages to the regional market, halving travel time for produce "
     "trucks. Spoilage of vegetables fell immediately. Transport unions "
     "praised the smooth surface and new bridges. Traders expect farm "
     "gate prices to improve as buyers reach remote farms. The works "
     "agency will maintain the route year round.",
     "2015-09-18", A),
    ("doc21", "Solar pumps bring irrigation to dry plateau",
     "A solar pump program brought reliable irrigation to the dry "
     "plateau for the first time. Two hundred wells now feed drip lines "
     "on vegetable plots. Electricity savings let growers water twice "
     "daily during heat waves. The energy agency calls the project a "
     "model for off-grid farming. Families report better harvests and "
     "steadier income from the new irrigation.",
     "2016-04-26", B),
    ("doc22", "New grain warehouse network opens",
     "A network of certified grain warehouses opened across the central "
     "provinces, offering cheap storage and electronic receipts that "
     "banks accept as loan collateral. Farmers can now hold grain past "
     "the harvest glut and sell when prices improve. The storage agency "
     "expects losses from moisture and pests to drop sharply. Traders "
     "welcome the transparent grading system.",
     "2017-10-11", A),
    ("doc23", "Rural electrification reaches dairy belt",
     "The rural electrification program connected the dairy belt to the "
     "national grid this month. Chilling tanks now run through the "
     "night, and milk rejection rates fell at once. Processors plan new "
     "collection routes around the powered villages. The utility praised "
     "local crews for finishing ahead of schedule. Dairy households "
     "expect higher income as quality premiums kick in.",
     "2018-12-03", B),
    ("doc24", "Irrigation canal modernization cuts water losses",
     "Engineers finished lining the main irrigation canal, cutting "
     "seepage losses by a third. Tail-end farmers receive full "
     "allocations for the first time in years. The water authority "
     "installed automated gates and remote sensors. Crop planners expect "
     "a second vegetable season on the reclaimed flow. Officials call "
     "the modernization the backbone of the valley's farm economy.",
     "2020-01-17", A),

    # --- stakeholders: labor, communities, organizations (mixed lean) ---
    ("doc25", "Farm workers strike over harvest wages",
     "Seasonal farm workers struck at the height of the fruit harvest, "
     "demanding higher wages and shade breaks. Packing sheds stood idle "
     "for three days. Grower associations warned of spoilage, while the "
     "labor union accused estates of ignoring heat rules. A mediator "
     "brokered a partial wage deal. Both sides agree the seasonal labor "
     "shortage gives workers new bargaining power.",
     "2015-05-29", B),
    ("doc26", "Women's cooperative wins regional produce contract",
     "A women's cooperative won the regional contract to supply "
     "vegetables to school kitchens. The group trained forty members in "
     "grading and bookkeeping. Community leaders praised the award as a "
     "boost for household income. The cooperative will hire youth for "
     "delivery routes. Buyers cited reliable quality as the deciding "
     "factor in the tender.",
     "2016-09-09", A),
    ("doc27", "Village assembly splits over grazing commons",
     "A village assembly split angrily over rules for the grazing "
     "commons. Herder families want rotational access preserved, while "
     "crop growers push to fence the bottomlands. Elders failed to "
     "broker a compromise, and the dispute now heads to the district "
     "council. Researchers warn that unresolved commons conflicts erode "
     "trust and slow every joint investment in the village.",
     "2017-02-14", B),
    ("doc28", "Youth training program fills extension gap",
     "A youth training program graduated its first class of village "
     "extension agents. The trainees learned pest scouting, soil "
     "testing, and record keeping. Host communities welcomed the "
     "graduates, and several cooperatives hired them at once. Organizers "
     "say the program fills the gap left by retiring government agents. "
     "Donors praised the practical curriculum and promised a second "
     "cohort.",
     "2019-07-24", A),
    ("doc29", "Herder and farmer groups sign corridor accord",
     "Herder associations and farmer unions signed an accord mapping "
     "seasonal livestock corridors around cropland. Joint patrols will "
     "mark the routes before the rains. The accord ends a year of "
     "quarrels over trampled fields. Local officials called the "
     "agreement a model of community mediation. Both groups committed "
     "to a shared fund for water points along the corridors.",
     "2020-05-08", B),
]


def main() -> int:
    assert len(DOCS) == 30
    assert [d[0] for d in DOCS] == [f"doc{i:02d}" for i in range(30)]
    in_window = [d for d in DOCS if "2015-01-01" <= d[3] <= "2019-12-31"]
    assert len(in_window) == 26, len(in_window)
    assert not [d for d in DOCS if d[3].startswith("2016-07")]
    assert "Dr." in DOCS[5][2]
    assert "drought-resistant" in DOCS[1][2]

    with open(OUT, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "title", "content", "published", "source"])
        for doc_id, title, content, published, source in DOCS:
            writer.writerow([doc_id, title, content, published, source])
    print(f"wrote {len(DOCS)} documents to {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
