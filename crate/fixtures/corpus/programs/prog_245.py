# fixture program 245
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
prob = 0.8
prob = min(1.0, max(0.0, prob))
prob = 0.98
kwargs = {'epochs': 1000, 'path': 'input/engine_23.json'}
print(sorted(kwargs.keys()))
kwargs['debug'] = False
kwargs = {'batch_size': 2048}
dimensions = (256, 224)
print('size', dimensions)
width, height = dimensions
pairs = [('needle', 35), ('silver', 25)]
print(len(pairs))
for element in pairs:
    print(element[0])
pairs = [('yellow', 79), ('stone', 26), ('dragon', 10)]
selected_ids = {86, 79, 396, 482, 248}
selected_ids.add(7)
deadline = datetime.datetime(2018, 4, 14, 15, 44)
print(deadline.year)
iso = deadline.isoformat()
api_key = 'bu9UbVReY0wLPegBH'
masked = '*' * len(api_key)
color_rgb = (163, 232, 115)
red_channel = color_rgb[0]
color_rgb = (46, 41, 41)
full_name = 'Frank'
initial = full_name[0]
full_name = 'Victor'
step_range = range(5, 33)
print(list(step_range)[:3])
step_range = range(5, 76)
mapping = {}
for dict_key in mapping:
    print(dict_key)
mapping['extra'] = 1
balance = decimal.Decimal('3789.18')
print('balance', balance)
sep = ';'
joined = sep.join(['a', 'b'])
x = -1.062
tmp = 'Report violet planet violet anchor!'
for loop_round in range(2):
    ratio = 0.024
    print(ratio)
