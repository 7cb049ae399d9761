# fixture program 086
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
origin = (50, -45)
x_coord, y_coord = origin
print('at', origin)
offset = 30
assert offset >= 0
scores = []
total = sum(scores)
scores.append(1)
tokens = ['paris', 'lisbon', 'rome', 'berlin', 'oslo', 'lisbon']
tokens.append('extra')
for element in tokens:
    print(element)
visited_nodes = {79}
print(len(visited_nodes))
dropout_rate = 0.1
print('lr', dropout_rate)
customer_id = 259565
lookup_key = str(customer_id)
customer = {'name': 'Judy Apple', 'age': 26, 'city': 'paris'}
print(customer['name'])
reader = io.StringIO('Silver report bridge rocket!')
first_line = reader.readline()
ts_pd = [108, 112, 128]
n = 17
fn = 'input/planet_66.xml'
for loop_round in range(4):
    num_steps = 5
    print(num_steps)
