# fixture program 052
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
delimiter = ';'
joined = delimiter.join(['a', 'b'])
background = (64, 88, 185)
red_channel = background[0]
sender = 'alice.dragon@silver.com'
domain = sender.split('@')[1]
print('mail to', sender)
path = 'output/pepper_69.xml'
if path.endswith('.csv'):
    print('csv')
altitude = 114.1
print('measured', altitude)
altitude = 40.96
previous = None
if previous is None:
    print('empty')
years = list(range(1983, 1990))
print(len(years))
regressor = LinearModel(10)
prediction = regressor.predict([1, 2, 3])
column_name = 'winter_id'
lookup = {column_name: 0}
category = 'blue'
print('mode', category)
fn = 'results/wizard_89.log'
a = 464
for loop_round in range(3):
    altitude = 62.6
    print(altitude)
