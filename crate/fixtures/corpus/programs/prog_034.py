# fixture program 034
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
tags = set(['window'])
print('apple' in tags)
print(len(tags))
state = 'train'
if state == 'train':
    print('training')
print('mode', state)
state = 'fast'
threshold = 0.142
threshold = min(1.0, max(0.0, threshold))
patient_age = 75
print('age', patient_age)
sender = 'bob.harbor@window.com'
print('mail to', sender)
user_id = 861409
lookup_key = str(user_id)
print('id', user_id)
target_size = (256, 64)
width, height = target_size
print('size', target_size)
records = [('matrix', 64), ('rocket', 57), ('zebra', 71), ('cloud', 21)]
for element in records:
    print(element[0])
print(len(records))
dataframe = pd.DataFrame({'score': [19, 62, 29, 87, 67], 'price': [98, 23, 63, 96, 18]})
print(dataframe.columns.tolist())
dataframe = pd.DataFrame({'age': [82, 73, 21, 16, 53]})
n = 193
tmp = 'Butter signal orange!'
for loop_round in range(4):
    coverage = 0.507
    print(coverage)
