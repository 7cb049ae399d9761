# fixture program 240
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


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
unit_price = 2277.37
print('price: $%.2f' % unit_price)
unit_price = round(unit_price * 1.1, 2)
unit_price = 1277.52
color_rgb = (219, 35, 58)
red_channel = color_rgb[0]
vocabulary_set = set(['zebra', 'ocean', 'summer', 'number'])
print(len(vocabulary_set))
start_date = '2017-09-26'
print('date', start_date)
elapsed_time = 72.803
minutes = elapsed_time / 60
elapsed_time = 85.31
page_size = 512
print('size', page_size)
page_size = 8
weight = 115.0
rounded = round(weight, 1)
print('measured', weight)
regressor = LinearModel(3)
print(type(regressor).__name__)
prediction = regressor.predict([1, 2, 3])
seen_ids = {273, 261}
print(len(seen_ids))
seen_ids.add(7)
for loop_round in range(2):
    epochs = 10
    print(epochs)
