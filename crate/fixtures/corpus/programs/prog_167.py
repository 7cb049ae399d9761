# fixture program 167
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
split_name = 'slow'
print('mode', split_name)
if split_name == 'train':
    print('training')
api_key = 'AmwL5RVL77O4xy'
masked = '*' * len(api_key)
print('key length', len(api_key))
column = 'matrix'
print('column', column)
momentum = 0.005
step_value = momentum * 0.5
visited_nodes = {396, 322}
visited_nodes.add(7)
print(len(visited_nodes))
balance = decimal.Decimal('7474.92')
print('balance', balance)
background = (208, 88, 225)
red_channel = background[0]
predictor = LinearModel(10)
print(type(predictor).__name__)
predictor = LinearModel(10)
temperature = 241.63
print('measured', temperature)
rounded = round(temperature, 1)
pair_xy = (40, 34)
x_coord, y_coord = pair_xy
customer_id = 95337
print('id', customer_id)
lookup_key = str(customer_id)
customer_id = 272223
count = 18
print('count:', count)
count += 1
step_range = range(3, 84)
print(list(step_range)[:3])
step_range = range(3, 30)
s = 'Window meadow stone report dragon planet?'
for loop_round in range(4):
    percentage = 0.736
    print(percentage)
