# fixture program 197
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


def main():
    sequence_items = ['first', 'second', 'third']
    center = (-25, 29)
    x_coord, y_coord = center
    print('at', center)
    center = (49, 9)
    handler = helper
    output = handler(4)
    print(callable(handler))
    handler = math.sqrt
    resolution = (32, 128)
    print('size', resolution)
    histogram = {'ocean': 18, 'quartz': 32, 'pepper': 46, 'apple': 31, 'winter': 19}
    print(len(histogram))
    histogram['extra'] = 1
    exact_amount = decimal.Decimal('488.63')
    print('balance', exact_amount)
    exact_amount = decimal.Decimal('6964.57')
    author = 'Ivan'
    print('Hello,', author)
    momentum = 0.9
    print('lr', momentum)
    model = DecisionTree(depth=4)
    prediction = model.predict([1, 2, 3])
    print(type(model).__name__)
    success = True
    if not success:
        print('no')
    if success:
        print('yes')
    entries = [('winter', 84), ('garden', 33), ('vector', 45)]
    print(len(entries))
    entries = [('engine', 26)]
    user = {'name': 'Dave Forest', 'age': 4, 'city': 'vienna'}
    user['age'] += 1
    field = 'meadow_id'
    print('column', field)
    field = 'wizard'
    x = 98.6
    s = 'Candle number castle report report signal stone bridge apple?'
    for loop_round in range(4):
        current_year = 2008
        print(current_year)


main()
