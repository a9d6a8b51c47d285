# coding=utf-8

# Import order follows the dependencies between the modules.
from ordalab.modules.intervals import IntervalsModule
from ordalab.modules.plmap import PLMapModule
from ordalab.modules.thompson import ThompsonModule
from ordalab.modules.pingpong import PingPongModule
from ordalab.modules.ordering import OrderingModule
from ordalab.modules.amalgam import AmalgamModule
from ordalab.modules.braid import BraidModule


MODULE_MAPPING = {
        'amalgam': AmalgamModule,
        'braid': BraidModule,
        'map': PLMapModule,
        'order': OrderingModule,
        'pingpong': PingPongModule,
        'sets': IntervalsModule,
        'thompson': ThompsonModule,
}
